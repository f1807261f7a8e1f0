#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lssd/linked_system.hpp"
#include "lssd/matrix.hpp"

namespace lssd {

struct kerdock_bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct kerdock_budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct construction_integrity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bit index of the coefficient of x_i x_j (i < j) in a packed
// strictly-upper-triangular mask.
int pair_bit(int n, int i, int j);

// Quadratic form on GF(2)^n: Q(x) = sum_{i<j} upper_{ij} x_i x_j + l.x,
// with coordinate i of a point taken from bit i of its index.
struct QuadForm {
  int n = 0;
  std::uint64_t upper = 0;  // packed via pair_bit
  std::uint32_t linear = 0;

  int operator()(std::uint32_t x) const;
};

// Evaluations [Q(x)] over all 2^n points in index order.
std::vector<std::uint8_t> truth_table(const QuadForm& q);

// Rows (as bit masks) of the alternating bilinear form B = U + U^T.
std::vector<std::uint32_t> bilinear_matrix(const QuadForm& q);

int gf2_rank(std::vector<std::uint32_t> rows);

// Rank over GF(2) of a square 01 matrix.
int bilinear_rank_gf2(const IntMat& m);

struct KerdockFamily {
  int n = 0;
  std::vector<QuadForm> forms;
};

// Every pairwise sum has a full-rank bilinear form.
bool pairwise_full_rank(const KerdockFamily& fam);

// The catalogued n = 4 family of 8 forms (zero linear parts), meeting the
// 2^{n-1} bound.
KerdockFamily kerdock_catalog_n4();

// Complete backtracking over strictly-upper coefficient masks, first form
// fixed to zero (any family translates to one containing it).  Throws
// kerdock_bound_error when target_w > 2^{n-1} or the full search space is
// exhausted, kerdock_budget_error when the node budget runs out first.
KerdockFamily search_kerdock_family(int n, int target_w,
                                    long long node_budget = 2'000'000);

// The coset [Q(x)]_x + RM(1, n): 2^{n+1} codewords of length 2^n, affine
// part enumerated with the linear coefficient outer and the constant inner.
std::vector<std::vector<std::uint8_t>> rm1_coset(const QuadForm& q);

// 2^n vectors of length 2^n - 1 with entries +-1 and pairwise dot -1
// (the 1/sqrt(2^n - 1) normalization left implicit).
struct SignSimplex {
  int n = 0;
  std::vector<std::vector<std::int8_t>> vecs;
};

// Codewords of the coset vanishing at the last point, last coordinate
// dropped, 0 mapped to -1.
SignSimplex kerdock_simplex(const QuadForm& q);

// One fiber per form, vertices the simplex vectors, cross edges where the
// unscaled dot product is positive; parameters
// (2^{2r}, 2^{r-1}(2^r + 1), 2^{r-1}(2^{r-1} + 1)) with r = n/2.
LssdGraph cameron_seidel_lssd(const KerdockFamily& fam);

}  // namespace lssd
