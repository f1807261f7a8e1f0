#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lssd/geometry.hpp"
#include "lssd/linked_system.hpp"
#include "lssd/quadratic_forms.hpp"

using namespace lssd;

namespace {

LssdGraph kerdock16(int w) {
  LssdGraph g = cameron_seidel_lssd(kerdock_catalog_n4());
  std::vector<int> keep;
  for (int i = 1; i <= w; ++i) keep.push_back(i);
  return restrict_fibers(g, keep);
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("one regular simplex") {
  auto [gram, profile] = simplex_gram(validate_params(16, 10, 6), 1);
  CHECK(gram.dim == 16);
  CHECK(gram.scale == 30);  // (v-1) s
  CHECK(gram.claimed_rank == 15);
  CHECK(gram.entries(0, 0) == 30);
  CHECK(gram.entries(0, 1) == -2);
  CHECK(profile.within_fiber_ip == Rat(-1, 15));
  CHECK(rank_exact(gram.entries) == 15);
}

TEST_CASE("linked simplices still span only v-1 dimensions") {
  LssdGraph g = kerdock16(3);
  auto [gram, profile] = simplex_gram(g.params, 3, &g);
  CHECK(gram.dim == 48);
  CHECK(gram.scale == 30);
  CHECK(gram.claimed_rank == 15);
  CHECK(profile.cross_ip_positive == Rat(1, 5));    // (v-k)/((v-1)s)
  CHECK(profile.cross_ip_negative == Rat(-1, 3));   // -k/((v-1)s)

  // cross entries are v-k on mu-edges and -k on nu-edges
  bool saw6 = false, sawMinus10 = false;
  for (int j = 16; j < 32; ++j) {
    if (gram.entries(0, j) == 6) saw6 = true;
    if (gram.entries(0, j) == -10) sawMinus10 = true;
    CHECK((gram.entries(0, j) == 6 || gram.entries(0, j) == -10));
  }
  CHECK(saw6);
  CHECK(sawMinus10);

  CHECK_THROWS_AS(simplex_gram(g.params, 3), std::invalid_argument);
}

TEST_CASE("the simplex Gram determines the system") {
  LssdGraph g = kerdock16(3);
  auto [gram, profile] = simplex_gram(g.params, 3, &g);
  LssdGraph back = lssd_from_gram(gram, 16, 3);
  CHECK(back.params.k == 10);
  CHECK(back.blocks == g.blocks);
}

TEST_CASE("the companion pair of two linked simplices is the complement") {
  LssdGraph g = kerdock16(2);
  auto [gram, profile] = simplex_gram(g.params, 2, &g, true);
  CHECK(gram.claimed_rank == 15);
  LssdGraph back = lssd_from_gram(gram, 16, 2);
  CHECK(back.params.k == 6);
  CHECK(back.blocks == multipartite_complement(g).blocks);

  LssdGraph g3 = kerdock16(3);
  CHECK_THROWS_AS(simplex_gram(g3.params, 3, &g3, true),
                  std::invalid_argument);
}

TEST_CASE("tampered Gram matrices are rejected") {
  LssdGraph g = kerdock16(3);
  auto [gram, profile] = simplex_gram(g.params, 3, &g);
  ScaledGram bad = gram;
  bad.entries(0, 20) = 7;
  bad.entries(20, 0) = 7;
  CHECK_THROWS_AS(lssd_from_gram(bad, 16, 3), design_error);
}

TEST_CASE("equiangular lines from three fibers") {
  auto [gram, co] = equiangular_gram(kerdock16(3), 3);
  CHECK(gram.dim == 48);
  CHECK(gram.scale == 144);  // v t (2s-1)
  CHECK(gram.claimed_rank == 18);
  CHECK(rank_exact(gram.entries) == 18);
  CHECK(co.c == Rat(1, 3));
  CHECK(co.alpha == Rat(7, 36));
  CHECK(co.beta == Rat(1, 12));
  CHECK(co.gamma == Rat(1, 9));

  for (std::size_t i = 0; i < 48; ++i) CHECK(gram.entries(i, i) == 240);
  for (std::size_t i = 0; i < 48; ++i)
    for (std::size_t j = i + 1; j < 48; ++j) {
      Int e = gram.entries(i, j);
      CHECK((e == 48 || e == -48));
      CHECK(e == gram.entries(j, i));
    }
}

TEST_CASE("line counts and ranks at the extremes of t") {
  auto [g1, c1] = equiangular_gram(kerdock16(3), 1);
  CHECK(g1.dim == 16);
  CHECK(g1.claimed_rank == 16);

  auto [g8, c8] = equiangular_gram(kerdock16(8), 8);
  CHECK(g8.dim == 128);
  CHECK(g8.claimed_rank == 23);  // v + t - 1
  CHECK(g8.entries(0, 0) == 640);
  Int off = g8.scale / 3;
  CHECK(off == 128);

  CHECK_THROWS_AS(equiangular_gram(kerdock16(3), 4), std::invalid_argument);
  CHECK_THROWS_AS(equiangular_gram(kerdock16(3), 0), std::invalid_argument);
}

TEST_CASE("a degenerate system still yields equiangular lines") {
  auto [gram, co] = equiangular_gram(degenerate_lssd(4, 3), 3);
  CHECK(gram.dim == 12);
  CHECK(gram.claimed_rank == 6);  // v + t - 1
  CHECK(co.alpha == Rat(1, 6));
  CHECK(co.c == 1);
}

TEST_CASE("unbiased-bases Gram of the Menon system") {
  MubGram m = mub_gram(kerdock16(3));
  CHECK(m.gram.dim == 48);
  CHECK(m.gram.scale == 32);  // v s
  CHECK(m.gram.claimed_rank == 16);
  CHECK(rank_exact(m.gram.entries) == 16);
  CHECK(m.beta1 == Rat(1, 4));
  CHECK(m.beta2 == Rat(-1, 4));
  CHECK(m.is_mub);

  // within a fiber the candidate basis is orthonormal
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      CHECK(m.gram.entries(i, j) == (i == j ? 32 : 0));
  // across fibers all inner products have magnitude 1/sqrt(v)
  for (int j = 16; j < 48; ++j) {
    Int e = m.gram.entries(0, j);
    CHECK((e == 8 || e == -8));
  }

  // same Gram from the complementary presentation
  MubGram mc = mub_gram(multipartite_complement(kerdock16(3)));
  CHECK(mc.gram.entries == m.gram.entries);
  CHECK(mc.is_mub);
}

TEST_CASE("non-Menon parameters produce a Gram that is not a MUB set") {
  MubGram m = mub_gram(degenerate_lssd(4, 3));
  CHECK(!m.is_mub);
  CHECK(m.beta1 == 1);
  CHECK(m.beta2 == 0);
}

TEST_CASE("frame identity for the +-1 simplex") {
  SignSimplex sx = kerdock_simplex(kerdock_catalog_n4().forms[1]);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> x(15), y(15);
    for (int i = 0; i < 15; ++i) {
      x[i] = Rat(num(rng), den(rng));
      y[i] = Rat(num(rng), den(rng));
    }
    auto [lhs, rhs] = frame_sum_check(sx, x, y);
    CHECK(lhs == rhs);
  }
}

}  // TEST_SUITE
