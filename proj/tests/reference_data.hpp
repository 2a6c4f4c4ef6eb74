#ifndef GHRS_TESTS_REFERENCE_DATA_HPP
#define GHRS_TESTS_REFERENCE_DATA_HPP

// Frozen data for the q = 17 worked example: its parameters, the reference
// G/H matrices as printed in the source material, and the matrices the
// pipeline actually derives from the same parameters (cross-validated
// against an independent implementation).

#include <cstdint>
#include <vector>

namespace ghrs_tests {

inline const std::vector<std::uint32_t> kExampleAlpha = {3, 2, 7};

inline const std::vector<std::vector<std::uint32_t>> kExampleV = {
    {8, 9, 10}, {11, 11, 16}, {11, 2, 11}, {12, 7, 12},
    {8, 15, 10}, {2, 5, 10}, {10, 4, 16},
};

inline constexpr int kExampleT = 3;

// Reference generator matrix (3 x 21) as printed.
inline const std::vector<std::vector<std::uint32_t>> kReferenceG = {
    {1, 0, 0, 13, 12, 0, 9, 14, 9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 14, 6, 2, 4, 10, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 4, 3, 7, 9, 14, 9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

// Reference parity-check matrix (18 x 21) as printed.
inline std::vector<std::vector<std::uint32_t>> reference_h() {
  std::vector<std::vector<std::uint32_t>> h = {
      {1, 0, 7, 0, 0, 4, 0, 0, 15, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 12, 0, 0, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 11, 0, 0, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 11, 0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 16, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 1, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
  };
  for (int i = 0; i < 12; ++i) {
    std::vector<std::uint32_t> row(21, 0);
    row[static_cast<std::size_t>(9 + i)] = 1;
    h.push_back(std::move(row));
  }
  return h;
}

// What the pipeline derives from (alpha, V, t) above; values cross-checked
// against an independent implementation of the same definitions.
inline const std::vector<std::vector<std::uint32_t>> kDerivedG = {
    {1, 0, 0, 9, 15, 6, 14, 1, 14, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 13, 11, 12, 1, 11, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 10, 7, 15, 10, 8, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

inline std::vector<std::vector<std::uint32_t>> derived_h() {
  std::vector<std::vector<std::uint32_t>> h = {
      {1, 0, 6, 0, 0, 2, 0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 11, 0, 0, 6, 0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 11, 0, 0, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 11, 0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 16, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 1, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
  };
  for (int i = 0; i < 12; ++i) {
    std::vector<std::uint32_t> row(21, 0);
    row[static_cast<std::size_t>(9 + i)] = 1;
    h.push_back(std::move(row));
  }
  return h;
}

// Check-node adjacency of the reference H's Tanner graph (1-based variables),
// matching the published figure.
inline const std::vector<std::vector<int>> kReferenceCheckAdjacency = {
    {1, 3, 6, 9}, {2, 3, 6}, {4, 6, 9}, {5, 6, 9}, {7, 9}, {8, 9},
};

}  // namespace ghrs_tests

#endif  // GHRS_TESTS_REFERENCE_DATA_HPP
