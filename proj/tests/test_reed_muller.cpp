#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rmcsst/errors.hpp"
#include "rmcsst/reed_muller.hpp"

using namespace rmcsst;

TEST_CASE("rm_code small parameters") {
  const RmCode rep = rm_code(0, 3);
  CHECK(rep.code.length() == 8);
  CHECK(rep.code.dim() == 1);
  CHECK(*min_distance(rep.code) == 8);

  const RmCode first_order = rm_code(1, 3);
  CHECK(first_order.code.dim() == 4);
  CHECK(*min_distance(first_order.code) == 4);

  const RmCode full = rm_code(3, 3);
  CHECK(full.code.dim() == 8);
  CHECK(*min_distance(full.code) == 1);

  CHECK(rm_code(-1, 3).code.dim() == 0);
}

TEST_CASE("rm_code argument validation") {
  CHECK_THROWS_AS(rm_code(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(rm_code(-2, 3), std::invalid_argument);
  CHECK_THROWS_AS(rm_code(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(rm_code(1, 15), EnumerationCapError);
}

TEST_CASE("generator rows follow the evaluation and monomial conventions") {
  // m=2: columns are points 0..3, variable x_j is bit j of the point.
  const RmCode rm12 = rm_code(1, 2);
  CHECK(rm12.code.generator().row(0).to_string() == "1111");
  CHECK(rm12.code.generator().row(1).to_string() == "0101");  // x_0
  CHECK(rm12.code.generator().row(2).to_string() == "0011");  // x_1

  // m=4, r=2: degree-2 monomials in lex order on the variable sets, so
  // {0,3} precedes {1,2}.
  const RmCode rm24 = rm_code(2, 4);
  const BitVector x0x3 = rm24.code.generator().row(7);
  const BitVector x1x2 = rm24.code.generator().row(8);
  for (std::size_t p = 0; p < 16; ++p) {
    CHECK(x0x3.get(p) == ((p & 0b1001) == 0b1001));
    CHECK(x1x2.get(p) == ((p & 0b0110) == 0b0110));
  }
}

TEST_CASE("rm_params closed form") {
  const RmParams a = rm_params(2, 4);
  CHECK(a.n == 16);
  CHECK(a.k == 11);
  CHECK(*a.d == 4);

  const RmParams b = rm_params(1, 5);
  CHECK(b.n == 32);
  CHECK(b.k == 6);
  CHECK(*b.d == 16);

  const RmParams z = rm_params(-1, 3);
  CHECK(z.n == 8);
  CHECK(z.k == 0);
  CHECK_FALSE(z.d);

  CHECK_THROWS_AS(rm_params(4, 3), std::invalid_argument);
}

TEST_CASE("rm_dual_order") {
  CHECK(rm_dual_order(1, 3) == 1);
  CHECK(rm_dual_order(0, 4) == 3);
  CHECK(rm_dual_order(3, 3) == -1);
}

TEST_CASE("dual identity dual(RM(r,m)) = RM(m-r-1,m)") {
  for (unsigned m = 1; m <= 6; ++m) {
    for (int r = 0; r < static_cast<int>(m); ++r) {
      CAPTURE(m);
      CAPTURE(r);
      CHECK(dual(rm_code(r, m).code).canon() == rm_code(rm_dual_order(r, m), m).code.canon());
    }
  }
}

TEST_CASE("nested property RM(r2,m) inside RM(r1,m)") {
  for (unsigned m = 1; m <= 7; ++m) {
    for (int r1 = -1; r1 <= static_cast<int>(m); ++r1) {
      for (int r2 = -1; r2 <= r1; ++r2) {
        CAPTURE(m);
        CAPTURE(r1);
        CAPTURE(r2);
        CHECK(is_subcode(rm_code(r2, m).code, rm_code(r1, m).code));
      }
    }
  }
}

TEST_CASE("dimension matches the binomial sum up to m = 10") {
  for (unsigned m = 1; m <= 10; ++m) {
    for (int r = -1; r <= static_cast<int>(m); ++r) {
      CAPTURE(m);
      CAPTURE(r);
      CHECK(BigUint(rm_code(r, m).code.dim()) == binomial_sum(m, r));
      if (r >= 0) CHECK(rm_code(r, m).code.dim() == rm_params(r, m).k);
    }
  }
}

TEST_CASE("minimum distance 2^(m-r) at small scale") {
  for (unsigned m = 1; m <= 4; ++m) {
    for (int r = 0; r <= static_cast<int>(m); ++r) {
      CAPTURE(m);
      CAPTURE(r);
      const LinearCode c = rm_code(r, m).code;
      CHECK(*min_distance(c) == std::uint64_t{1} << (m - r));
      if (c.dim() <= 14) CHECK(min_distance(c) == oracles::naive_min_distance(c));
    }
  }
  CHECK(*min_distance(rm_code(1, 5).code) == 16);
  CHECK(*min_distance(rm_code(2, 5).code) == 8);
}
