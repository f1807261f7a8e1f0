#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lssd/design.hpp"
#include "lssd/linked_system.hpp"

namespace lssd {

// Necessary conditions for a linked system on more than two fibers with
// 1 < k < v-1: s integral, exactly one integral nu branch, gcd(k, v) > 1,
// gcd(s, v) > 1 (hence v composite).
struct ScreenVerdict {
  bool s_integral = false;
  bool nu_plus_integral = false;
  bool nu_minus_integral = false;
  Int gcd_k_v;
  Int gcd_s_v;  // 0 when s is not an integer
  bool v_composite = false;
  bool degenerate = false;
  bool feasible = false;
  std::optional<Branch> branch;    // set when exactly one branch is integral
  std::vector<std::string> notes;  // names of the failed conditions
};

ScreenVerdict integrality_screen(const Int& v, const Int& k, const Int& lambda);

struct BoundsReport {
  // Triple-intersection bound in the shape (w-1) * coeff <= rhs.
  Int noda_lhs_coeff;
  Int noda_rhs;
  std::optional<Int> noda_w_max;  // absent when the coefficient is <= 0

  std::optional<Rat> krein_w_max;  // (v-2)s/(2k-v) + 1, set when 2k > v
  Int absolute_w_max;  // floor((v-1)/2), or floor((v+1)/2) when q_{11}^1 = 0
  std::optional<Int> menon_w_max;  // set when v = 4s^2 and v-2k = -2s

  bool noda_holds(const Int& w) const {
    return (w - 1) * noda_lhs_coeff <= noda_rhs;
  }
};

// q111_is_zero: whether q_{11}^1 vanishes for the intended w (the closed
// form depends on w, so the caller decides).
BoundsReport bounds(const DesignParams& p, bool q111_is_zero);

// The complementary pair (4u^2, (2u-1)u, (u-1)u) and (4u^2, (2u+1)u, (u+1)u).
std::pair<DesignParams, DesignParams> menon_params(const Int& u);

// One member of one of the 21 catalogued design families, identified by its
// family-specific indices (q, m, t, d, p, n as applicable).
struct FamilySpec {
  int family_id = 0;
  std::map<std::string, Int> idx;
};

struct FamilyResult {
  bool rejected = false;  // family-level obstruction, no parameters produced
  std::string reason;
  Int v, k, lambda;
};

// Evaluates the family's closed form, or rejects when the family carries a
// structural obstruction (prime v required, non-square order, a derived
// index failing its primality/integrality constraint).  Invalid inputs
// (unknown index, q not a prime power where the formula needs a field)
// throw std::invalid_argument.
FamilyResult family_params(const FamilySpec& f);

struct FamilyRow {
  FamilySpec spec;
  FamilyResult result;
  std::optional<ScreenVerdict> screen;  // absent for rejected rows
  bool pass = false;
};

enum class FamilyVerdict { AlwaysPass, PassIffMEquals1, NeverPass, Mixed };

struct FamilyScreen {
  int family_id = 0;
  std::vector<FamilyRow> rows;
  FamilyVerdict verdict = FamilyVerdict::Mixed;
};

// Screens the given members (or a family-appropriate default range) and
// aggregates a verdict over exactly the rows tested.
FamilyScreen screen_family(int family_id);
FamilyScreen screen_family(int family_id, const std::vector<FamilySpec>& range);

std::vector<FamilySpec> default_family_range(int family_id);
// Varies the family's primary index over lo..hi, other indices at their
// smallest valid values.
std::vector<FamilySpec> family_range(int family_id, const Int& lo,
                                     const Int& hi);

const char* family_name(int family_id);

}  // namespace lssd
