// Command-line front end: construction, analysis, and export of evaluation
// codes over plain-text inputs. Exit codes: 0 success, 1 verification
// failure, 2 input error. Identical inputs produce byte-identical output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ghrs/code.hpp"
#include "ghrs/interp.hpp"
#include "ghrs/ldpc.hpp"
#include "ghrs/qc.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ghrs::ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ghrs::Code load_code(const std::string& path) { return ghrs::code_from_text(read_file(path)); }

ghrs::VecOrder parse_order(const std::string& s) {
  if (s == "row") return ghrs::VecOrder::row_major;
  if (s == "col") return ghrs::VecOrder::col_major;
  throw ghrs::ParseError("order must be 'row' or 'col'");
}

ghrs::GenForm parse_form(const std::string& s) {
  if (s == "raw") return ghrs::GenForm::raw;
  if (s == "rref") return ghrs::GenForm::rref;
  if (s == "forward") return ghrs::GenForm::forward;
  throw ghrs::ParseError("form must be 'raw', 'rref' or 'forward'");
}

void print_vector(const std::vector<ghrs::Fq>& v, const char* label) {
  std::cout << label << ": ";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << v[i].rep();
  }
  std::cout << '\n';
}

int cmd_encode(const std::string& codefile, const std::string& poly_text) {
  ghrs::Code code = load_code(codefile);
  ghrs::Poly f = ghrs::Poly::from_text(code.field(), poly_text);
  ghrs::Mat a = evaluate(code, f);
  std::cout << ghrs::to_text(a);
  print_vector(ghrs::vectorize(a, ghrs::VecOrder::row_major), "row_major");
  print_vector(ghrs::vectorize(a, ghrs::VecOrder::col_major), "col_major");
  return kOk;
}

int cmd_genmatrix(const std::string& codefile, const std::string& form, const std::string& order) {
  ghrs::Code code = load_code(codefile);
  std::cout << ghrs::to_text(generator_matrix(code, parse_form(form), parse_order(order)));
  return kOk;
}

int cmd_paritycheck(const std::string& codefile, const std::string& order) {
  ghrs::Code code = load_code(codefile);
  std::cout << ghrs::to_text(parity_check_matrix(code, parse_order(order)));
  return kOk;
}

int cmd_mindist(const std::string& codefile, std::uint64_t budget, int jobs, bool machine) {
  ghrs::Code code = load_code(codefile);
  ghrs::MinDistanceOptions opts;
  opts.budget = budget;
  opts.jobs = jobs;
  auto rep = mds_check(code, opts);
  if (machine) {
    std::cout << "dimension: " << rep.dimension << '\n';
    std::cout << "distance: " << rep.distance << '\n';
    std::cout << "defect: " << rep.singleton_defect << '\n';
    std::cout << "all_nonzero: " << (rep.all_nonzero ? "true" : "false") << '\n';
    std::cout << "mds: " << (rep.mds ? "true" : "false") << '\n';
  } else {
    std::cout << "d = " << rep.distance << ", MDS: " << (rep.mds ? "yes" : "no") << '\n';
    if (!rep.all_nonzero)
      std::cout << "note: multiplier matrix has zero entries; MDS checked, not assumed\n";
  }
  return kOk;
}

int cmd_dual(const std::string& codefile) {
  ghrs::Code code = load_code(codefile);
  std::vector<ghrs::Fq> alpha;
  for (auto a : code.alpha_reps()) alpha.push_back(code.field().element(a));
  ghrs::Mat w = dual_multiplier(code.field(), alpha, code.multipliers());
  std::cout << "W:\n" << ghrs::to_text(w);
  ghrs::Code dual(code.field(), alpha, w, code.block_length() - code.t());
  std::cout << "dual code file:\n" << to_text(dual);
  return kOk;
}

int cmd_verify_duality(const std::string& codefile, bool machine) {
  ghrs::Code code = load_code(codefile);
  std::vector<ghrs::Fq> alpha;
  for (auto a : code.alpha_reps()) alpha.push_back(code.field().element(a));
  auto rep = verify_duality(code.field(), alpha, code.multipliers(), code.t());
  if (machine) {
    std::cout << "duality: " << (rep.passed() ? "pass" : "fail") << '\n';
    std::cout << "dim_v: " << rep.dim_v << '\n';
    std::cout << "dim_w: " << rep.dim_w << '\n';
    std::cout << "orthogonal: " << (rep.orthogonal ? "true" : "false") << '\n';
    std::cout << "rowspace_equal: " << (rep.rowspace_equal ? "true" : "false") << '\n';
    std::cout << "w_has_zero_entries: " << (rep.w_has_zero_entries ? "true" : "false") << '\n';
    if (rep.first_violation)
      std::cout << "first_violation: x^" << rep.first_violation->first << " x^"
                << rep.first_violation->second << '\n';
  } else {
    std::cout << "duality: " << (rep.passed() ? "pass" : "fail") << '\n';
    if (!rep.orthogonal && rep.first_violation)
      std::cout << "first violated pair: deg " << rep.first_violation->first << " against deg "
                << rep.first_violation->second << '\n';
    if (!rep.dims_ok)
      std::cout << "dimension check failed: dim_v = " << rep.dim_v << ", dim_w = " << rep.dim_w
                << ", block length = " << rep.rs << '\n';
    if (!rep.rowspace_equal) std::cout << "row spaces differ\n";
  }
  return rep.passed() ? kOk : kVerificationFailure;
}

int cmd_sparsity(const std::string& codefile, bool machine) {
  ghrs::Code code = load_code(codefile);
  auto g = ghrs::sparsity_report(generator_matrix(code, ghrs::GenForm::rref));
  auto h = ghrs::sparsity_report(parity_check_matrix(code));
  auto fwd = ghrs::sparsity_report(generator_matrix(code, ghrs::GenForm::forward));

  std::optional<long long> bound;
  try {
    bound = ghrs::zero_lower_bound(code.r(), code.s(), code.t());
  } catch (const ghrs::CaseOutOfRange&) {
  }
  std::optional<ghrs::LdpcCondition> cond;
  try {
    cond = ghrs::ldpc_condition(code.r(), code.s(), code.t());
  } catch (const ghrs::HypothesisViolation&) {
  }

  if (machine) {
    std::cout << "g_zeros: " << g.zeros << '\n';
    std::cout << "g_nonzeros: " << g.nonzeros << '\n';
    std::cout << "g_sparsity_pct: " << g.percent() << '\n';
    std::cout << "h_zeros: " << h.zeros << '\n';
    std::cout << "h_nonzeros: " << h.nonzeros << '\n';
    std::cout << "h_sparsity_pct: " << h.percent() << '\n';
    std::cout << "forward_zeros: " << fwd.zeros << '\n';
    std::cout << "bound: " << (bound ? std::to_string(*bound) : "n/a") << '\n';
    std::cout << "bound_ok: " << (!bound || fwd.zeros >= *bound ? "true" : "false") << '\n';
    std::cout << "condition: " << (cond ? ghrs::to_string(*cond) : "n/a") << '\n';
  } else {
    std::cout << "G sparsity: " << g.percent() << " (" << g.zeros << "/" << g.total << " zeros)\n";
    std::cout << "H sparsity: " << h.percent() << " (" << h.zeros << "/" << h.total << " zeros)\n";
    std::cout << "forward-echelon zeros: " << fwd.zeros;
    if (bound)
      std::cout << " (bound " << *bound << ": " << (fwd.zeros >= *bound ? "ok" : "VIOLATED") << ")";
    std::cout << '\n';
    std::cout << "LDPC condition: " << (cond ? ghrs::to_string(*cond) : "n/a") << '\n';
  }
  if (bound && fwd.zeros < *bound) return kVerificationFailure;
  return kOk;
}

int cmd_tanner(const std::string& codefile, const std::string& format) {
  ghrs::Code code = load_code(codefile);
  auto graph = ghrs::tanner_graph(parity_check_matrix(code));
  if (format == "alist")
    std::cout << ghrs::export_alist(graph);
  else if (format == "dot")
    std::cout << ghrs::export_dot(graph);
  else
    throw ghrs::ParseError("format must be 'alist' or 'dot'");
  return kOk;
}

int cmd_qc_check(const std::string& codefile, bool machine) {
  ghrs::Code code = load_code(codefile);
  const bool qc = ghrs::is_quasi_cyclic(code);
  if (machine)
    std::cout << "qc: " << (qc ? "true" : "false") << '\n';
  else
    std::cout << "quasi-cyclic: " << (qc ? "yes" : "no") << '\n';
  return qc ? kOk : kVerificationFailure;
}

int cmd_qc_make(const std::string& specfile) {
  auto parsed = ghrs::qc_spec_from_text(read_file(specfile));
  ghrs::Code code = ghrs::qc_code(parsed.spec, parsed.t);
  std::cout << to_text(code);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperderivative evaluation codes: construction, analysis, export"};
  app.require_subcommand(1);
  bool machine = false;

  std::string codefile, poly_text, form = "raw", order = "row", format = "alist", specfile;
  std::uint64_t budget = 1'000'000;
  int jobs = 1;

  auto* encode = app.add_subcommand("encode", "evaluate a polynomial to a codeword matrix");
  encode->add_option("codefile", codefile)->required();
  encode->add_option("--poly", poly_text, "coefficients low-to-high, comma separated")->required();

  auto* gen = app.add_subcommand("genmatrix", "generator matrix");
  gen->add_option("codefile", codefile)->required();
  gen->add_option("--form", form, "raw|rref|forward");
  gen->add_option("--order", order, "row|col");

  auto* parity = app.add_subcommand("paritycheck", "canonical parity-check matrix");
  parity->add_option("codefile", codefile)->required();
  parity->add_option("--order", order, "row|col");

  auto* mindist = app.add_subcommand("mindist", "exhaustive NRT minimum distance");
  mindist->add_option("codefile", codefile)->required();
  mindist->add_flag("--machine", machine, "emit key: value lines");
  mindist->add_option("--budget", budget, "max q^t");
  mindist->add_option("--jobs", jobs, "parallel workers");

  auto* dual = app.add_subcommand("dual", "dual multiplier and dual code file");
  dual->add_option("codefile", codefile)->required();

  auto* verify = app.add_subcommand("verify-duality", "check the duality identities");
  verify->add_option("codefile", codefile)->required();
  verify->add_flag("--machine", machine, "emit key: value lines");

  auto* sparsity = app.add_subcommand("sparsity", "sparsity report, bound and condition");
  sparsity->add_option("codefile", codefile)->required();
  sparsity->add_flag("--machine", machine, "emit key: value lines");

  auto* tanner = app.add_subcommand("tanner", "Tanner graph export");
  tanner->add_option("codefile", codefile)->required();
  tanner->add_option("--format", format, "alist|dot");

  auto* qc_check = app.add_subcommand("qc-check", "verify column-cyclic closure");
  qc_check->add_option("codefile", codefile)->required();
  qc_check->add_flag("--machine", machine, "emit key: value lines");

  auto* qc_make = app.add_subcommand("qc-make", "synthesize a code from a qc spec");
  qc_make->add_option("specfile", specfile)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (encode->parsed()) return cmd_encode(codefile, poly_text);
    if (gen->parsed()) return cmd_genmatrix(codefile, form, order);
    if (parity->parsed()) return cmd_paritycheck(codefile, order);
    if (mindist->parsed()) return cmd_mindist(codefile, budget, jobs, machine);
    if (dual->parsed()) return cmd_dual(codefile);
    if (verify->parsed()) return cmd_verify_duality(codefile, machine);
    if (sparsity->parsed()) return cmd_sparsity(codefile, machine);
    if (tanner->parsed()) return cmd_tanner(codefile, format);
    if (qc_check->parsed()) return cmd_qc_check(codefile, machine);
    if (qc_make->parsed()) return cmd_qc_make(specfile);
  } catch (const ghrs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ghrs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kInputError;
}
