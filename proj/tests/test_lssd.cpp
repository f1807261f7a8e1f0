#include "doctest.h"
#include "lssd/linked_system.hpp"
#include "lssd/quadratic_forms.hpp"

using namespace lssd;

namespace {

LssdGraph kerdock16(int w) {
  KerdockFamily fam = kerdock_catalog_n4();
  LssdGraph g = cameron_seidel_lssd(fam);
  std::vector<int> keep;
  for (int i = 1; i <= w; ++i) keep.push_back(i);
  return restrict_fibers(g, keep);
}

}  // namespace

TEST_SUITE("lssd") {

TEST_CASE("cross intersection numbers pick the unique integral branch") {
  MuNu mn = mu_nu(validate_params(16, 10, 6));
  CHECK(mn.mu == 7);
  CHECK(mn.nu == 5);
  CHECK(mn.branch == Branch::Minus);

  MuNu mc = mu_nu(validate_params(16, 6, 2));
  CHECK(mc.mu == 1);
  CHECK(mc.nu == 3);
  CHECK(mc.branch == Branch::Plus);

  MuNu big = mu_nu(validate_params(1296, 666, 342));
  CHECK(big.mu == 351);
  CHECK(big.nu == 333);
  CHECK(big.branch == Branch::Minus);

  // degenerate pair: k = 1 forces nu = 0, k = v-1 forces nu = v-1
  MuNu d1 = mu_nu(validate_params(4, 1, 0));
  CHECK(d1.mu == 1);
  CHECK(d1.nu == 0);
  CHECK(d1.branch == Branch::Minus);
  MuNu d2 = mu_nu(validate_params(4, 3, 2));
  CHECK(d2.mu == 2);
  CHECK(d2.nu == 3);
  CHECK(d2.branch == Branch::Plus);

  CHECK_THROWS_AS(mu_nu(validate_params(7, 3, 1)), no_integral_branch);
  CHECK_THROWS_AS(mu_nu(validate_params(2, 1, 0)), both_branches_integral);
}

TEST_CASE("heaviness and outlook") {
  LssdClass a = classify(validate_params(16, 10, 6));
  CHECK(a.heaviness == Heaviness::MuHeavy);
  CHECK(a.outlook == Outlook::Optimistic);

  LssdClass b = classify(validate_params(16, 6, 2));
  CHECK(b.heaviness == Heaviness::NuHeavy);
  CHECK(b.outlook == Outlook::Optimistic);

  LssdClass d = classify(validate_params(6, 1, 0));
  CHECK(d.heaviness == Heaviness::MuHeavy);
  CHECK(d.outlook == Outlook::Pessimistic);
}

TEST_CASE("the identity-block system verifies for every w") {
  for (int w : {2, 3, 5}) {
    LssdGraph g = degenerate_lssd(4, w);
    CHECK(g.w == w);
    CHECK(g.blocks.size() == static_cast<std::size_t>(w * (w - 1) / 2));
    LssdReport rep = verify_lssd(g);
    CHECK(rep.ok());
    if (w > 2) {
      CHECK(*rep.observed_mu == 1);
      CHECK(*rep.observed_nu == 0);
    }
  }
  LssdReport two = verify_lssd(degenerate_lssd(4, 2));
  CHECK(two.ok());
  CHECK(!two.note.empty());  // axiom iii is vacuous on two fibers
}

TEST_CASE("the catalogued Kerdock system verifies on 3 and on all 8 fibers") {
  LssdGraph g3 = kerdock16(3);
  CHECK(g3.params.v == 16);
  CHECK(g3.params.k == 10);
  CHECK(g3.params.lambda == 6);
  LssdReport r3 = verify_lssd(g3);
  CHECK(r3.ok());
  CHECK(*r3.observed_mu == 7);
  CHECK(*r3.observed_nu == 5);

  LssdGraph g8 = kerdock16(8);
  CHECK(verify_lssd(g8).ok());
}

TEST_CASE("a single flipped edge is caught with a witness") {
  LssdGraph g = kerdock16(3);
  g.blocks.at({1, 2}).flip(4, 11);
  LssdReport rep = verify_lssd(g);
  CHECK(!rep.ok());
  CHECK(!rep.axiom_ii_ok);
  REQUIRE(!rep.failures.empty());
  const AxiomFailure& f = rep.failures.front();
  CHECK(f.axiom == 2);
  CHECK(f.fibers[0] == 1);
  CHECK(f.fibers[1] == 2);
}

TEST_CASE("a linking failure names the fiber triple") {
  LssdGraph g = degenerate_lssd(4, 3);
  BinMatrix swap = BinMatrix::identity(4);
  swap.flip(0, 0);
  swap.flip(1, 1);
  swap.flip(0, 1);
  swap.flip(1, 0);
  g.blocks.at({2, 3}) = swap;  // still a (4,1,0) design, no longer linked
  LssdReport rep = verify_lssd(g);
  CHECK(rep.axiom_ii_ok);
  CHECK(!rep.axiom_iii_ok);
  REQUIRE(!rep.failures.empty());
  CHECK(rep.failures.front().axiom == 3);
}

TEST_CASE("multipartite complement toggles the design and round trips") {
  LssdGraph g = kerdock16(3);
  LssdGraph c = multipartite_complement(g);
  CHECK(c.params.k == 6);
  CHECK(c.params.lambda == 2);
  LssdReport rep = verify_lssd(c);
  CHECK(rep.ok());
  CHECK(*rep.observed_mu == 1);
  CHECK(*rep.observed_nu == 3);

  LssdGraph back = multipartite_complement(c);
  CHECK(back.params.k == g.params.k);
  CHECK(back.blocks == g.blocks);

  // the degenerate system complements to the trivial (4, 3, 2) system
  LssdGraph dc = multipartite_complement(degenerate_lssd(4, 3));
  CHECK(dc.params.k == 3);
  CHECK(dc.params.lambda == 2);
  CHECK(verify_lssd(dc).ok());
}

TEST_CASE("fiber restriction keeps blocks and relabels") {
  LssdGraph g = kerdock16(4);
  LssdGraph sub = restrict_fibers(g, {2, 4});
  CHECK(sub.w == 2);
  CHECK(sub.block(1, 2) == g.block(2, 4));
  LssdGraph swapped = restrict_fibers(g, {4, 2});
  CHECK(swapped.block(1, 2) == g.block(2, 4).transpose());
}

TEST_CASE("block accessor orientation") {
  LssdGraph g = kerdock16(3);
  CHECK(g.relation(1, 2) == g.block(1, 2));
  CHECK(g.relation(2, 1) == g.block(1, 2).transpose());
  CHECK_THROWS(g.block(2, 1));
}

}  // TEST_SUITE
