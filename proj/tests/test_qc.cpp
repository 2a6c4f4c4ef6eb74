#include <doctest.h>

#include <random>

#include "ghrs/qc.hpp"

using ghrs::Code;
using ghrs::Field;
using ghrs::Mat;
using ghrs::Poly;
using ghrs::QcSpec;

namespace {

QcSpec spec_q7() {
  Field f = Field::prime(7);
  return ghrs::make_qc_spec(f, f(2), 3, 2, {f(1), f(1)});
}

}  // namespace

TEST_CASE("multiplicative order") {
  Field f = Field::prime(17);
  CHECK(ghrs::multiplicative_order(f, 4) == 4);   // 4^2 = 16, 4^4 = 1
  CHECK(ghrs::multiplicative_order(f, 2) == 8);
  CHECK(ghrs::multiplicative_order(f, 1) == 1);
  CHECK_THROWS_AS(ghrs::multiplicative_order(f, 0), ghrs::DivisionByZero);
}

TEST_CASE("qc spec validation") {
  Field f = Field::prime(17);
  CHECK_THROWS_AS(ghrs::make_qc_spec(f, f(2), 4, 2, {f(1), f(1)}), ghrs::OrderMismatch);
  CHECK_THROWS_AS(ghrs::make_qc_spec(f, f(4), 4, 2, {f(1), f(0)}), ghrs::ZeroSeed);
  auto ok = ghrs::make_qc_spec(f, f(4), 4, 2, {f(1), f(3)});
  CHECK(ok.r == 4);
}

TEST_CASE("qc code synthesis") {
  Code c = ghrs::qc_code(spec_q7(), 3);
  CHECK(c.alpha_reps() == std::vector<std::uint32_t>{1, 2, 4});
  CHECK(c.multipliers() == Mat::from_rows(c.field(), 3, {{1, 1, 1}, {1, 2, 4}}));
  CHECK(ghrs::satisfies_qc_ratios(c.multipliers(), c.field()(2)));

  // r = 1 is the trivial single-point case
  Field f = Field::prime(5);
  auto one = ghrs::make_qc_spec(f, f(1), 1, 3, {f(1), f(2), f(3)});
  Code c1 = ghrs::qc_code(one, 2);
  CHECK(c1.r() == 1);
  CHECK(ghrs::is_quasi_cyclic(c1));
}

TEST_CASE("column shift") {
  Field f = Field::prime(5);
  Mat a = Mat::from_rows(f, 3, {{1, 2, 3}, {4, 0, 1}});
  CHECK(ghrs::column_shift(a, 0) == a);
  CHECK(ghrs::column_shift(a, 3) == a);
  CHECK(ghrs::column_shift(a, 1) == Mat::from_rows(f, 3, {{3, 1, 2}, {1, 4, 0}}));
  CHECK(ghrs::column_shift(ghrs::column_shift(a, 1), 2) == a);
  CHECK(ghrs::column_shift(a, -1) == ghrs::column_shift(a, 2));
}

TEST_CASE("col-major vectorization turns a column shift into a block rotation") {
  std::mt19937 rng(51);
  Field f = Field::prime(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 2 + static_cast<int>(rng() % 4);
    Mat a(f, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a.set_rep(i, j, rng() % 7);
    auto v = ghrs::vectorize(a, ghrs::VecOrder::col_major);
    auto sv = ghrs::vectorize(ghrs::column_shift(a, 1), ghrs::VecOrder::col_major);
    // right rotation by the column height
    const std::size_t n = v.size();
    for (std::size_t k = 0; k < n; ++k)
      CHECK(sv[k] == v[(k + n - static_cast<std::size_t>(rows)) % n]);
  }
}

TEST_CASE("quasi-cyclicity of synthesized codes") {
  std::mt19937 rng(52);
  Field f = Field::prime(7);
  for (int t : {1, 2, 3, 4, 6}) {
    QcSpec spec = ghrs::make_qc_spec(f, f(2), 3, 2, {f(1 + rng() % 6), f(1 + rng() % 6)});
    CHECK(ghrs::is_quasi_cyclic(ghrs::qc_code(spec, t)));
  }
}

TEST_CASE("ratio-breaking perturbation is detected") {
  Code c = ghrs::qc_code(spec_q7(), 3);
  Mat v = c.multipliers();
  v.set_rep(1, 1, 3);  // was 2
  CHECK_FALSE(ghrs::satisfies_qc_ratios(v, c.field()(2)));
  std::vector<ghrs::Fq> alpha;
  for (auto a : c.alpha_reps()) alpha.push_back(c.field().element(a));
  Code broken(c.field(), alpha, v, 3);
  CHECK_FALSE(ghrs::is_quasi_cyclic(broken));
}

TEST_CASE("full space is shift closed") {
  Code c = ghrs::qc_code(spec_q7(), 6);  // t = rs
  CHECK(ghrs::is_quasi_cyclic(c));
}

TEST_CASE("shift witness") {
  Code c = ghrs::qc_code(spec_q7(), 3);
  const Field& f = c.field();
  CHECK(ghrs::shift_witness(c, Poly(f, {1})) == Poly(f, {1}));
  CHECK(ghrs::shift_witness(c, Poly(f, {0, 1})) == Poly(f, {0, 4}));  // 1/2 = 4 mod 7

  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint32_t> coeffs(3);
    for (auto& x : coeffs) x = rng() % 7;
    Poly g(f, coeffs);
    Poly w = ghrs::shift_witness(c, g);  // throws on identity failure
    CHECK(evaluate(c, w) == ghrs::column_shift(evaluate(c, g), 1));
  }
}

TEST_CASE("shift witness rejects non-geometric codes") {
  Field f = Field::prime(7);
  Mat v = Mat::from_rows(f, 2, {{1, 1}, {1, 1}});
  Code c(f, {f(3), f(5)}, v, 2);
  CHECK_THROWS_AS(ghrs::shift_witness(c, Poly(f, {1})), ghrs::HypothesisViolation);
}

TEST_CASE("qc spec text format") {
  auto parsed = ghrs::qc_spec_from_text("7, 3, 2, 2, seed: 1,1, 3");
  CHECK(parsed.spec.r == 3);
  CHECK(parsed.spec.s == 2);
  CHECK(parsed.spec.alpha_rep == 2);
  CHECK(parsed.spec.seed == std::vector<std::uint32_t>{1, 1});
  CHECK(parsed.t == 3);
  CHECK(ghrs::to_text(parsed.spec, parsed.t) == "7, 3, 2, 2, seed: 1,1, 3");
  auto back = ghrs::qc_spec_from_text(ghrs::to_text(parsed.spec, parsed.t));
  CHECK(back.spec.seed == parsed.spec.seed);

  CHECK_THROWS_AS(ghrs::qc_spec_from_text("7, 3, 2, 2, 1,1, 3"), ghrs::ParseError);
  CHECK_THROWS_AS(ghrs::qc_spec_from_text("7, 4, 2, 1, seed: 1, 2"), ghrs::OrderMismatch);
}
