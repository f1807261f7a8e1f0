#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "lssd/linked_system.hpp"
#include "lssd/matrix.hpp"

namespace lssd {

struct scheme_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct krein_violation : scheme_error {
  int i, j, k;
  krein_violation(int i_, int j_, int k_, const std::string& what)
      : scheme_error(what), i(i_), j(j_), k(k_) {}
};

// The four 01 relation matrices of the induced scheme on all vw vertices.
// Global vertex order: fibers in index order, fiber-local order within.
// Natural ordering: A[0] = I, A[1] = mu-heavy cross adjacency, A[2] =
// within-fiber complete graphs, A[3] = nu-heavy cross adjacency.  `params`
// is the mu-heavy parameter set this ordering corresponds to (the input's
// own parameters, or their complement when the input is nu-heavy).
struct RelationMatrices {
  std::size_t size = 0;
  std::array<BinMatrix, 4> A;
  DesignParams params;
  int w = 0;
};

// Refuses degenerate parameters: that scheme has no Q-polynomial ordering
// (s(v-2) > v-2k fails at k = 1, and the complement relabels to k = 1).
RelationMatrices relation_matrices(const LssdGraph& g);

// Same assembly without the degeneracy refusal, for callers that only need
// the relation algebra (report-style verification, Gram constructions).
RelationMatrices assemble_relations(const LssdGraph& g);

// Intersection matrices L0..L3 with L[i](k, j) = p_{ij}^k, in closed form
// from (v, k, lambda, mu, nu, w).
std::array<IntMat, 4> intersection_numbers(const DesignParams& p, int w);

// First and second eigenmatrices (P, Q) of the natural ordering; PQ = vw I.
std::pair<RatMat, RatMat> eigenmatrices(const DesignParams& p, int w);

// [1, v-1, (w-1)(v-1), w-1]
std::array<Int, 4> multiplicities(const DesignParams& p, int w);

struct KreinTables {
  RatMat L1;  // L1(k, j) = q_{1j}^k
  RatMat L3;  // L3(k, j) = q_{3j}^k
  std::array<Rat, 64> all;

  const Rat& q(int i, int j, int k) const {  // q_{ij}^k
    return all[static_cast<std::size_t>(((i * 4) + j) * 4 + k)];
  }
  Rat& q(int i, int j, int k) {
    return all[static_cast<std::size_t>(((i * 4) + j) * 4 + k)];
  }
};

// All q_{ij}^k by the standard formula
//   q_{ij}^k = (m_i m_j / vw) * sum_u P(i,u) P(j,u) P(k,u) / P(0,u)^2,
// cross-asserted against the closed-form L1* and L3*.  Throws
// krein_violation naming (i, j, k) when any value is negative.
KreinTables krein_parameters(const DesignParams& p, int w);

// Everything above in one bundle, for table printing.
struct SchemeTables {
  std::array<IntMat, 4> L;
  RatMat P, Q;
  RatMat Lstar1, Lstar3;
  std::array<Int, 4> m;
};

SchemeTables scheme_tables(const DesignParams& p, int w);

struct SchemeReport {
  bool constructed = false;
  bool algebra_ok = false;        // A_i A_j = sum_k p_{ij}^k A_k, all i, j
  bool q_poly_ok = false;         // s(v-2) > v-2k on the mu-heavy parameters
  bool q_antipodal_checked = false;  // skipped for w = 2
  bool q_antipodal_ok = false;    // q_{33}^1 = q_{33}^2 = 0
  std::string detail;

  bool ok() const {
    return constructed && algebra_ok && q_poly_ok &&
           (!q_antipodal_checked || q_antipodal_ok);
  }
};

// Full matrix verification of the induced scheme of a verified system.
SchemeReport verify_scheme(const LssdGraph& g);

}  // namespace lssd
