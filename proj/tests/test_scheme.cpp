#include "doctest.h"
#include "lssd/linked_system.hpp"
#include "lssd/quadratic_forms.hpp"
#include "lssd/scheme.hpp"

using namespace lssd;

namespace {

LssdGraph kerdock16(int w) {
  LssdGraph g = cameron_seidel_lssd(kerdock_catalog_n4());
  std::vector<int> keep;
  for (int i = 1; i <= w; ++i) keep.push_back(i);
  return restrict_fibers(g, keep);
}

IntMat mat4(std::initializer_list<long long> cells) {
  IntMat m(4, 4);
  auto it = cells.begin();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = *it++;
  return m;
}

RatMat rat4(std::initializer_list<Rat> cells) {
  RatMat m(4, 4);
  auto it = cells.begin();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST_SUITE("scheme") {

TEST_CASE("intersection matrices in closed form, (16,10,6) on 3 fibers") {
  auto L = intersection_numbers(validate_params(16, 10, 6), 3);
  CHECK(L[0] == IntMat::identity(4));
  CHECK(L[1] == mat4({0, 20, 0, 0,    //
                      1, 7, 9, 3,     //
                      0, 12, 0, 8,    //
                      0, 5, 10, 5}));
  CHECK(L[2] == mat4({0, 0, 15, 0,    //
                      0, 9, 0, 6,     //
                      1, 0, 14, 0,    //
                      0, 10, 0, 5}));

  // each L_i has constant row sums equal to the valency of relation i
  Int val[4] = {1, Int(10) * 2, 15, Int(6) * 2};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      Int sum = 0;
      for (int j = 0; j < 4; ++j) sum += L[i](k, j);
      CHECK(sum == val[i]);
    }
}

TEST_CASE("p_11^1 = mu(w-2) = 42 on 8 fibers") {
  auto L = intersection_numbers(validate_params(16, 10, 6), 8);
  CHECK(L[1](1, 1) == 42);
}

TEST_CASE("eigenmatrices and multiplicities, (16,10,6) on 3 fibers") {
  DesignParams p = validate_params(16, 10, 6);
  auto [P, Q] = eigenmatrices(p, 3);

  CHECK(P == rat4({1, 20, 15, 12,   //
                   1, 4, -1, -4,    //
                   1, -2, -1, 2,    //
                   1, -10, 15, -6}));
  CHECK(Q == rat4({1, 15, 30, 2,    //
                   1, 3, -3, -1,    //
                   1, -1, -2, 2,    //
                   1, -5, 5, -1}));

  RatMat prod = P * Q;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(prod(i, j) == (i == j ? 48 : 0));

  auto m = multiplicities(p, 3);
  CHECK(m[0] == 1);
  CHECK(m[1] == 15);
  CHECK(m[2] == 30);
  CHECK(m[3] == 2);

  CHECK_THROWS_AS(eigenmatrices(validate_params(7, 3, 1), 3), scheme_error);
}

TEST_CASE("Krein tables, (16,10,6) on 3 fibers") {
  KreinTables kt = krein_parameters(validate_params(16, 10, 6), 3);
  CHECK(kt.L1 == rat4({0, 15, 0, 0,                          //
                       1, Rat(10, 3), Rat(32, 3), 0,         //
                       0, Rat(16, 3), Rat(26, 3), 1,         //
                       0, 0, 15, 0}));
  CHECK(kt.L3 == rat4({0, 0, 0, 2,   //
                       0, 0, 2, 0,   //
                       0, 1, 1, 0,   //
                       1, 0, 0, 1}));
  // dual row sums: sum_j q_{ij}^k = m_i
  for (int k = 0; k < 4; ++k) {
    Rat s1 = 0, s3 = 0;
    for (int j = 0; j < 4; ++j) {
      s1 += kt.q(1, j, k);
      s3 += kt.q(3, j, k);
    }
    CHECK(s1 == 15);
    CHECK(s3 == 2);
  }
  // symmetry in the lower indices
  CHECK(kt.q(1, 2, 1) == kt.q(2, 1, 1));
  CHECK(kt.q(3, 1, 2) == kt.q(1, 3, 2));
}

TEST_CASE("Krein tables, (16,10,6) on 8 fibers") {
  KreinTables kt = krein_parameters(validate_params(16, 10, 6), 8);
  CHECK(kt.q(1, 1, 1) == 0);
  CHECK(kt.q(1, 1, 2) == 2);
  CHECK(kt.q(1, 2, 1) == 14);
  CHECK(kt.q(1, 2, 2) == 12);
  CHECK(kt.q(2, 2, 1) == 84);
  CHECK(kt.q(2, 2, 2) == 86);
  CHECK(kt.q(2, 2, 3) == 90);
  // the dual row sums recover the multiplicity m_2 = 105
  CHECK(kt.q(2, 0, 2) + kt.q(2, 1, 2) + kt.q(2, 2, 2) + kt.q(2, 3, 2) == 105);
  // Q-antipodality
  CHECK(kt.q(3, 3, 1) == 0);
  CHECK(kt.q(3, 3, 2) == 0);
}

TEST_CASE("nine fibers break the Krein condition for (16,10,6)") {
  CHECK_THROWS_AS(krein_parameters(validate_params(16, 10, 6), 9),
                  krein_violation);
  try {
    krein_parameters(validate_params(16, 10, 6), 9);
  } catch (const krein_violation& kv) {
    CHECK(kv.i == 1);
    CHECK(kv.j == 1);
    CHECK(kv.k == 1);
  }
}

TEST_CASE("relation matrices of a verified system") {
  LssdGraph g = kerdock16(3);
  RelationMatrices R = relation_matrices(g);
  CHECK(R.size == 48);
  CHECK(R.params.k == 10);

  // the four relations partition the vertex pairs
  for (std::size_t x = 0; x < 48; ++x)
    for (std::size_t y = 0; y < 48; ++y) {
      int hits = 0;
      for (int i = 0; i < 4; ++i) hits += R.A[i].get(x, y);
      CHECK(hits == 1);
    }
  CHECK(R.A[1].row_weight(0) == 20);
  CHECK(R.A[2].row_weight(0) == 15);
  CHECK(R.A[3].row_weight(0) == 12);

  // a nu-heavy input is relabelled to its mu-heavy complement
  RelationMatrices Rc = relation_matrices(multipartite_complement(g));
  CHECK(Rc.params.k == 10);
  CHECK(Rc.A[1] == R.A[1]);

  CHECK_THROWS_AS(relation_matrices(degenerate_lssd(4, 3)), scheme_error);
  CHECK(assemble_relations(degenerate_lssd(4, 3)).size == 12);
}

TEST_CASE("full scheme verification on the Kerdock systems") {
  SchemeReport r3 = verify_scheme(kerdock16(3));
  CHECK(r3.ok());
  CHECK(r3.algebra_ok);
  CHECK(r3.q_poly_ok);
  CHECK(r3.q_antipodal_checked);
  CHECK(r3.q_antipodal_ok);

  SchemeReport r2 = verify_scheme(kerdock16(2));
  CHECK(r2.ok());
  CHECK(!r2.q_antipodal_checked);
}

TEST_CASE("degenerate systems carry the algebra but no Q-polynomial order") {
  SchemeReport rep = verify_scheme(degenerate_lssd(4, 3));
  CHECK(rep.constructed);
  CHECK(rep.algebra_ok);
  CHECK(!rep.q_poly_ok);
  CHECK(!rep.ok());
}

TEST_CASE("tables bundle agrees with the parts") {
  DesignParams p = validate_params(16, 10, 6);
  SchemeTables t = scheme_tables(p, 3);
  auto [P, Q] = eigenmatrices(p, 3);
  CHECK(t.P == P);
  CHECK(t.Q == Q);
  CHECK(t.L == intersection_numbers(p, 3));
  KreinTables kt = krein_parameters(p, 3);
  CHECK(t.Lstar1 == kt.L1);
  CHECK(t.Lstar3 == kt.L3);
}

}  // TEST_SUITE
