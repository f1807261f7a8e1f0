#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lssd/linked_system.hpp"
#include "lssd/quadratic_forms.hpp"

using namespace lssd;

namespace {

// printed second form of the catalogued family and its evaluations
const char* const kCharvecQ2 = "0001000100011110";
const char* const kCharvecQ8 = "0001010001110010";

const char* const kX2[] = {
    "---+---+---++++", "+-+++-+++-++-+-", "++-+++-+++-+--+", "-+++-+++-++++--",
    "+++----++++-+++", "-+--+-++-+---+-", "--+-++-+--+---+", "+----++++---+--",
    "+++-+++----++++", "-+---+--+-++-+-", "--+---+-++-+--+", "+---+----++++--",
    "---++++-+++-+++", "+-++-+---+---+-", "++-+--+---+---+", "-++++---+---+--",
};

const char* const kCosetQ2[] = {
    "0001000100011110", "1110111011100001", "0100010001001011",
    "1011101110110100", "1101110111010010", "0010001000101101",
    "1000100010000111", "0111011101111000", "1110000111101110",
    "0001111000010001", "1011010010111011", "0100101101000100",
    "0010110100100010", "1101001011011101", "0111100001110111",
    "1000011110001000", "1110111000011110", "0001000111100001",
    "1011101101001011", "0100010010110100", "0010001011010010",
    "1101110100101101", "0111011110000111", "1000100001111000",
    "0001111011101110", "1110000100010001", "0100101110111011",
    "1011010001000100", "1101001000100010", "0010110111011101",
    "1000011101110111", "0111100010001000",
};

std::string bits(const std::vector<std::uint8_t>& v) {
  std::string s;
  for (std::uint8_t b : v) s += char('0' + b);
  return s;
}

std::string signs(const std::vector<std::int8_t>& v) {
  std::string s;
  for (std::int8_t b : v) s += b > 0 ? '+' : '-';
  return s;
}

}  // namespace

TEST_SUITE("gf2kerdock") {

TEST_CASE("quadratic form evaluation, LSB-first points") {
  QuadForm q;
  q.n = 3;
  q.upper = std::uint64_t(1) << pair_bit(3, 0, 1);  // x0 x1
  q.linear = 0b100;                                 // + x2
  CHECK(q(0b000) == 0);
  CHECK(q(0b011) == 1);
  CHECK(q(0b100) == 1);
  CHECK(q(0b111) == 0);
  CHECK(truth_table(q).size() == 8);
}

TEST_CASE("bilinear forms and GF(2) rank") {
  QuadForm q;
  q.n = 4;
  q.upper = std::uint64_t(1) << pair_bit(4, 0, 1);
  auto rows = bilinear_matrix(q);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == 0b0010);
  CHECK(rows[1] == 0b0001);
  CHECK(gf2_rank(rows) == 2);

  IntMat m(3, 3);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 1;
  m(2, 2) = 1;
  CHECK(bilinear_rank_gf2(m) == 2);
}

TEST_CASE("the catalogued n = 4 family") {
  KerdockFamily fam = kerdock_catalog_n4();
  CHECK(fam.n == 4);
  CHECK(fam.forms.size() == 8);
  CHECK(fam.forms[0].upper == 0);
  CHECK(fam.forms[0].linear == 0);
  CHECK(pairwise_full_rank(fam));

  CHECK(bits(truth_table(fam.forms[1])) == kCharvecQ2);
  CHECK(bits(truth_table(fam.forms[7])) == kCharvecQ8);

  KerdockFamily broken = fam;
  broken.forms[2] = broken.forms[1];
  CHECK(!pairwise_full_rank(broken));
}

TEST_CASE("coset of the first-order Reed-Muller code") {
  QuadForm q = kerdock_catalog_n4().forms[1];
  auto coset = rm1_coset(q);
  REQUIRE(coset.size() == 32);
  CHECK(bits(coset[0]) == bits(truth_table(q)));
  for (int t = 0; t < 16; ++t) CHECK(coset[1][t] == 1 - coset[0][t]);

  // codeword order is not part of the contract; the set is
  std::multiset<std::string> got, want;
  for (const auto& c : coset) got.insert(bits(c));
  for (const char* r : kCosetQ2) want.insert(r);
  CHECK(got == want);

  // nonzero codewords of weight 2^(n-1) +- 2^(n/2 - 1) or 2^(n-1): bent
  // functions plus affine parts
  for (const auto& c : coset) {
    int wt = 0;
    for (auto b : c) wt += b;
    CHECK((wt == 6 || wt == 10));
  }
}

TEST_CASE("sign simplex of a form") {
  SignSimplex sx = kerdock_simplex(kerdock_catalog_n4().forms[1]);
  CHECK(sx.n == 4);
  REQUIRE(sx.vecs.size() == 16);
  REQUIRE(sx.vecs[0].size() == 15);

  std::multiset<std::string> got, want;
  for (const auto& v : sx.vecs) got.insert(signs(v));
  for (const char* r : kX2) want.insert(r);
  CHECK(got == want);

  // pairwise dot exactly -1
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = a + 1; b < 16; ++b) {
      int dot = 0;
      for (int t = 0; t < 15; ++t) dot += sx.vecs[a][t] * sx.vecs[b][t];
      CHECK(dot == -1);
    }
}

TEST_CASE("search meets the bound at n = 4 and refuses beyond it") {
  KerdockFamily fam = search_kerdock_family(4, 8);
  CHECK(fam.forms.size() == 8);
  CHECK(pairwise_full_rank(fam));
  CHECK(verify_lssd(cameron_seidel_lssd(fam)).ok());

  CHECK_THROWS_AS(search_kerdock_family(4, 9), kerdock_bound_error);
  CHECK_THROWS_AS(search_kerdock_family(4, 8, 3), kerdock_budget_error);
  // odd dimension: alternating forms are always singular, invalid input
  CHECK_THROWS_AS(search_kerdock_family(3, 2), std::invalid_argument);
}

TEST_CASE("two forms on GF(2)^2 give the complete-graph system (4,3,2;2)") {
  KerdockFamily fam = search_kerdock_family(2, 2);
  LssdGraph g = cameron_seidel_lssd(fam);
  CHECK(g.params.v == 4);
  CHECK(g.params.k == 3);
  CHECK(g.params.lambda == 2);
  CHECK(verify_lssd(g).ok());
}

TEST_CASE("the full Cameron-Seidel system at n = 4") {
  LssdGraph g = cameron_seidel_lssd(kerdock_catalog_n4());
  CHECK(g.w == 8);
  CHECK(g.params.v == 16);
  CHECK(g.params.k == 10);
  CHECK(g.params.lambda == 6);
  LssdReport rep = verify_lssd(g);
  CHECK(rep.ok());
  CHECK(*rep.observed_mu == 7);
  CHECK(*rep.observed_nu == 5);
}

}  // TEST_SUITE
