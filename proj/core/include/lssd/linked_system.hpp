#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lssd/bitmatrix.hpp"
#include "lssd/design.hpp"

namespace lssd {

// Which sign of s is taken in nu = k(k +- s)/v, mu = nu -+ s.
enum class Branch { Plus, Minus };

struct MuNu {
  Int mu;
  Int nu;
  Branch branch;
};

struct no_integral_branch : design_error {
  using design_error::design_error;
};
struct both_branches_integral : design_error {
  using design_error::design_error;
};

// Cross-block intersection numbers for the given parameters.  Exactly one of
// the two sign branches yields integers (unless (v,k,lambda) = (2,1,0), where
// both do and we refuse to pick).
MuNu mu_nu(const DesignParams& p);

// MuHeavy: the mu-relation has the larger valency k(w-1) across fibers.
enum class Heaviness { MuHeavy, NuHeavy };
// Optimistic iff (2k - v)(mu - nu) > 0.
enum class Outlook { Optimistic, Pessimistic };

struct LssdClass {
  Heaviness heaviness;
  Outlook outlook;
};

LssdClass classify(const DesignParams& p);

// A w-partite graph on w fibers of v vertices each, stored as the 01
// biadjacency blocks of the fiber pairs (i, j) with 1 <= i < j <= w.
// block(i, j) rows are indexed by fiber i, columns by fiber j.
struct LssdGraph {
  int w = 0;
  DesignParams params;
  std::map<std::pair<int, int>, BinMatrix> blocks;

  // Stored block for i < j; throws std::out_of_range when absent.
  const BinMatrix& block(int i, int j) const;
  // Biadjacency of (i, j) in that orientation: block(i,j) or its transpose.
  BinMatrix relation(int i, int j) const;
};

struct AxiomFailure {
  int axiom = 0;                        // 1, 2 or 3
  std::array<int, 3> fibers{0, 0, 0};   // third entry 0 for axioms 1-2
  std::array<long long, 2> vertices{-1, -1};
  std::string detail;
};

struct LssdReport {
  bool axiom_i_ok = false;
  bool axiom_ii_ok = false;
  bool axiom_iii_ok = false;
  std::optional<Int> observed_mu;
  std::optional<Int> observed_nu;
  std::optional<LssdClass> cls;
  std::vector<AxiomFailure> failures;
  std::string note;

  bool ok() const { return axiom_i_ok && axiom_ii_ok && axiom_iii_ok; }
};

// Exact verification of all three axioms.  The first recorded failure per
// axiom is the lexicographically least witness (fiber tuple, then vertex
// pair).  For w = 2 axiom iii holds vacuously and a note says so.
LssdReport verify_lssd(const LssdGraph& g);

// Same fibers, all cross edges toggled.  Parameters become the complement
// design (v, v-k, v-2k+lambda); an involution that swaps heaviness.
LssdGraph multipartite_complement(const LssdGraph& g);

// The (v, 1, 0) system on w fibers whose blocks are all identity matrices.
LssdGraph degenerate_lssd(const Int& v, int w);

// Induced sub-system on the given fibers (1-based, distinct), re-indexed to
// 1..subset.size() in the given order.
LssdGraph restrict_fibers(const LssdGraph& g, const std::vector<int>& subset);

}  // namespace lssd
