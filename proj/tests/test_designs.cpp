#include "doctest.h"
#include "lssd/design.hpp"

using namespace lssd;

namespace {

// blocks {i, i+1, i+3} mod 7: the cyclic (7, 3, 1) plane
BinMatrix fano() {
  BinMatrix b(7, 7);
  for (int i = 0; i < 7; ++i) {
    b.set(i, i, true);
    b.set(i, (i + 1) % 7, true);
    b.set(i, (i + 3) % 7, true);
  }
  return b;
}

}  // namespace

TEST_SUITE("designs") {

TEST_CASE("parameter validation") {
  DesignParams p = validate_params(16, 10, 6);
  CHECK(p.n == 4);
  CHECK(*p.s == 2);
  CHECK(!p.degenerate);

  DesignParams f = validate_params(7, 3, 1);
  CHECK(f.n == 2);
  CHECK(!f.s);

  CHECK(validate_params(4, 1, 0).degenerate);
  CHECK(validate_params(4, 3, 2).degenerate);
  CHECK(validate_params(2, 1, 0).degenerate);

  CHECK_THROWS_AS(validate_params(10, 4, 1), design_error);   // k(k-1) != lambda(v-1)
  CHECK_THROWS_AS(validate_params(16, 16, 16), design_error);  // k >= v
  CHECK_THROWS_AS(validate_params(16, 10, -2), design_error);
  CHECK_THROWS_AS(validate_params(1, 0, 0), design_error);
  CHECK_THROWS_AS(validate_params(16, 10, 10), design_error);  // lambda >= k
}

TEST_CASE("complementation is an order-preserving involution") {
  DesignParams p = validate_params(16, 10, 6);
  DesignParams c = complement_params(p);
  CHECK(c.v == 16);
  CHECK(c.k == 6);
  CHECK(c.lambda == 2);
  CHECK(c.n == p.n);
  CHECK(*c.s == *p.s);
  DesignParams back = complement_params(c);
  CHECK(back.v == p.v);
  CHECK(back.k == p.k);
  CHECK(back.lambda == p.lambda);

  CHECK(complement_params(validate_params(4, 1, 0)).k == 3);
}

TEST_CASE("incidence check accepts the Fano plane and rejects a bit flip") {
  BinMatrix b = fano();
  DesignParams p = validate_params(7, 3, 1);
  CHECK(is_design_incidence(b, p));
  CHECK(is_design_incidence(b.transpose(), p));

  BinMatrix bad = b;
  bad.flip(3, 5);
  CHECK(!is_design_incidence(bad, p));

  // right parameters, wrong matrix shape
  CHECK_THROWS_AS(is_design_incidence(BinMatrix(7, 6), p),
                  std::invalid_argument);
  // complement of the plane is a (7, 4, 2) design, not a (7, 3, 1)
  CHECK(!is_design_incidence(b.complement(), p));
  CHECK(is_design_incidence(b.complement(), validate_params(7, 4, 2)));
}

TEST_CASE("incidence check works on the integer overload") {
  IntMat m = fano().to_int();
  CHECK(is_design_incidence(m, validate_params(7, 3, 1)));
  m(0, 0) = 2;
  CHECK_THROWS_AS(is_design_incidence(m, validate_params(7, 3, 1)),
                  std::invalid_argument);
}

TEST_CASE("identity and all-ones-minus-identity are the degenerate designs") {
  CHECK(is_design_incidence(BinMatrix::identity(5), validate_params(5, 1, 0)));
  CHECK(is_design_incidence(BinMatrix::identity(5).complement(),
                            validate_params(5, 4, 3)));
}

}  // TEST_SUITE
