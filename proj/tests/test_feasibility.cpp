#include <algorithm>

#include "doctest.h"
#include "lssd/feasibility.hpp"

using namespace lssd;

namespace {

bool has_note(const ScreenVerdict& sv, const char* note) {
  return std::find(sv.notes.begin(), sv.notes.end(), note) != sv.notes.end();
}

}  // namespace

TEST_SUITE("feasibility") {

TEST_CASE("integrality screen verdicts") {
  ScreenVerdict fano = integrality_screen(7, 3, 1);
  CHECK(!fano.feasible);
  CHECK(!fano.s_integral);
  CHECK(has_note(fano, "s_not_integral"));

  ScreenVerdict a = integrality_screen(16, 10, 6);
  CHECK(a.feasible);
  CHECK(a.s_integral);
  CHECK(*a.branch == Branch::Minus);
  CHECK(a.gcd_k_v == 2);
  CHECK(a.gcd_s_v == 2);
  CHECK(a.v_composite);
  CHECK(a.notes.empty());

  ScreenVerdict ac = integrality_screen(16, 6, 2);
  CHECK(ac.feasible);
  CHECK(*ac.branch == Branch::Plus);

  CHECK(integrality_screen(36, 21, 12).feasible);
  CHECK(integrality_screen(45, 12, 3).feasible);
  CHECK(integrality_screen(1296, 666, 342).feasible);

  ScreenVerdict deg = integrality_screen(4, 1, 0);
  CHECK(!deg.feasible);
  CHECK(deg.degenerate);
  CHECK(has_note(deg, "degenerate"));

  ScreenVerdict both = integrality_screen(2, 1, 0);
  CHECK(!both.feasible);
  CHECK(has_note(both, "both_branches_integral"));
  CHECK(!both.branch);

  // s = 2 but neither branch is integral
  ScreenVerdict nb = integrality_screen(15, 8, 4);
  CHECK(!nb.feasible);
  CHECK(nb.s_integral);
  CHECK(has_note(nb, "no_integral_branch"));

  CHECK_THROWS_AS(integrality_screen(10, 4, 1), design_error);
}

TEST_CASE("fiber bounds for (16,10,6)") {
  DesignParams p = validate_params(16, 10, 6);
  BoundsReport b = bounds(p, false);
  CHECK(b.noda_lhs_coeff == 20);
  CHECK(b.noda_rhs == 140);
  CHECK(*b.noda_w_max == 8);
  CHECK(b.noda_holds(8));
  CHECK(!b.noda_holds(9));
  CHECK(*b.krein_w_max == 8);
  CHECK(b.absolute_w_max == 7);
  CHECK(bounds(p, true).absolute_w_max == 8);
  CHECK(*b.menon_w_max == 8);
}

TEST_CASE("fiber bounds for the odd-side Menon design (36,21,12)") {
  DesignParams p = validate_params(36, 21, 12);
  BoundsReport b = bounds(p, false);
  CHECK(!b.noda_w_max);  // coefficient is negative for these parameters
  CHECK(b.noda_holds(100));
  CHECK(*b.krein_w_max == 18);
  CHECK(*b.menon_w_max == 2);
  CHECK(b.absolute_w_max == 17);
}

TEST_CASE("bounds edge cases") {
  BoundsReport deg = bounds(validate_params(4, 1, 0), false);
  CHECK(!deg.noda_w_max);
  CHECK(!deg.krein_w_max);  // 2k < v
  CHECK(!deg.menon_w_max);
  CHECK(deg.absolute_w_max == 1);

  // large Menon side with even s
  BoundsReport big = bounds(validate_params(1296, 666, 342), false);
  CHECK(*big.menon_w_max == 648);
  CHECK(*big.krein_w_max == Rat(1294) * 18 / 36 + 1);
}

TEST_CASE("Menon parameter pairs") {
  auto [a, b] = menon_params(2);
  CHECK(a.v == 16);
  CHECK(a.k == 6);
  CHECK(a.lambda == 2);
  CHECK(b.k == 10);
  CHECK(b.lambda == 6);
  auto [c, d] = menon_params(3);
  CHECK(c.k == 15);
  CHECK(d.k == 21);
  CHECK_THROWS_AS(menon_params(0), std::invalid_argument);
}

TEST_CASE("every catalogued family settles to its known verdict") {
  auto expected = [](int id) {
    switch (id) {
      case 6:
      case 7:
      case 9:
      case 13:
      case 14:
        return FamilyVerdict::AlwaysPass;
      case 12:
      case 15:
      case 16:
      case 17:
      case 18:
      case 19:
        return FamilyVerdict::PassIffMEquals1;
      default:
        return FamilyVerdict::NeverPass;
    }
  };
  for (int id = 1; id <= 21; ++id) {
    CAPTURE(id);
    FamilyScreen fs = screen_family(id);
    CHECK(!fs.rows.empty());
    CHECK(fs.verdict == expected(id));
    for (const FamilyRow& r : fs.rows) {
      if (r.result.rejected) continue;
      // every produced triple is at least a symmetric design parameter set
      CHECK_NOTHROW(validate_params(r.result.v, r.result.k, r.result.lambda));
    }
  }
}

TEST_CASE("mixed-m families pass exactly at m = 1") {
  for (int id : {12, 15, 16, 17, 18, 19}) {
    CAPTURE(id);
    for (const FamilyRow& r : screen_family(id).rows) {
      if (r.result.rejected) continue;
      auto it = r.spec.idx.find("m");
      REQUIRE(it != r.spec.idx.end());
      CHECK(r.pass == (it->second == 1));
    }
  }
}

TEST_CASE("family plumbing") {
  for (int id = 1; id <= 21; ++id) {
    CHECK(family_name(id) != nullptr);
    CHECK(!default_family_range(id).empty());
  }
  CHECK_THROWS_AS(family_params(FamilySpec{0, {}}), std::invalid_argument);
  CHECK_THROWS_AS(default_family_range(22), std::invalid_argument);

  std::vector<FamilySpec> r = family_range(21, 2, 6);
  CHECK(r.size() == 5);
  FamilyScreen fs = screen_family(21, r);
  CHECK(fs.verdict == FamilyVerdict::NeverPass);
  for (const FamilyRow& row : fs.rows) CHECK(!row.pass);
}

}  // TEST_SUITE
