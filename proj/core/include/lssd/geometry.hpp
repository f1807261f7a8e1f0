#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lssd/linked_system.hpp"
#include "lssd/matrix.hpp"
#include "lssd/quadratic_forms.hpp"

namespace lssd {

// Integer matrix D*G for a real Gram matrix G of unit or constant-norm
// vectors; exact rank is certified on construction for dimensions up to
// kRankCertifyLimit and taken from the idempotent multiplicities beyond it.
struct ScaledGram {
  std::size_t dim = 0;
  Int scale;  // D > 0
  IntMat entries;
  Int claimed_rank;
};

inline constexpr std::size_t kRankCertifyLimit = 1024;

// The three inner products among the simplex vectors of a linked system.
struct GramProfile {
  Rat within_fiber_ip;    // -1/(v-1)
  Rat cross_ip_positive;  // larger cross value
  Rat cross_ip_negative;  // smaller cross value
};

// Weights of the rank-one-sum decomposition of an equiangular line-system
// Gram, plus the common inner product c = 1/(2s-1).
struct LineSystemCoeffs {
  Rat alpha, beta, gamma;
  Rat c;
};

struct MubGram {
  ScaledGram gram;
  Rat beta1, beta2;  // cross inner products (v-k+s)/(vs), -(k-s)/(vs)
  bool is_mub = false;
};

// Gram matrix of the w linked unit simplices, scaled by D = (v-1)s:
// diagonal D, within-fiber -s, cross-fiber v-k on mu-edges and -k on
// nu-edges.  A graph is required for w >= 2; second_pair selects the
// negate-one-simplex companion system (w = 2 only).
std::pair<ScaledGram, GramProfile> simplex_gram(const DesignParams& p, int w,
                                                const LssdGraph* g = nullptr,
                                                bool second_pair = false);

// Inverse direction: recover the linked system from a two-valued simplex
// Gram.  Adjacency is the larger cross value; k is recovered from the
// balance equation k*gamma + (v-k)*zeta = 0.
LssdGraph lssd_from_gram(const ScaledGram& gram, const Int& v, int w);

// Equiangular system of v*t lines with common inner product 1/(2s-1),
// from the first t fibers.  Scale D = v*t*(2s-1); entries have constant
// diagonal and off-diagonal magnitude D/(2s-1).
std::pair<ScaledGram, LineSystemCoeffs> equiangular_gram(const LssdGraph& g,
                                                         int t);

// w(E0 + E1) scaled by D = v*s: the Gram matrix of w candidate unbiased
// bases.  is_mub iff the parameters are optimistic Menon (|v-2k| = 2s).
MubGram mub_gram(const LssdGraph& g);

// For a regular simplex a_1..a_v of +-1 vectors in R^(v-1), returns the two
// sides of the frame identity
//   (1/(v-1)) sum_i <a_i,x><a_i,y>  and  (v/(v-1)) <x,y>.
std::pair<Rat, Rat> frame_sum_check(const SignSimplex& simplex,
                                    const std::vector<Rat>& x,
                                    const std::vector<Rat>& y);

}  // namespace lssd
