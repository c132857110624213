#include "doctest.h"
#include "helpers.hpp"

#include "dessins/errors.hpp"

using namespace dessins;

TEST_CASE("products compose left to right") {
  auto p = test::perm(3, "(0,1)");
  auto q = test::perm(3, "(1,2)");
  // 0 -> 1 -> 2
  CHECK((p * q)[0] == 2);
  CHECK(render(p * q) == "(0,2,1)");
  CHECK((p * q).inverse() == q * p);
}

TEST_CASE("cycle types and orders") {
  auto p = test::perm(12, "(0,2,4)(1,3,5)(6,8,10)(7,9,11)");
  CHECK(cycle_type(p).str() == "3^4");
  CHECK(order(p) == 3);
  auto z = test::perm(14, "(0,5,11,9,13,7,3)(1,4,10,8,12,6,2)");
  CHECK(cycle_type(z).str() == "7^2");
  CHECK(fixed_points(test::perm(5, "(0,1)")).size() == 3);
  CHECK(CycleType::parse("3^2 1^2").degree() == 8);
}

TEST_CASE("identity renders as ()") {
  CHECK(render(Permutation::identity(4)) == "()");
  CHECK(parse_permutation("()", 4).is_identity());
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS(parse_permutation("(0,0)", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("(0,5)", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("(0,1", 3), InvalidArgument);
}

TEST_CASE("conjugation is g^-1 p g") {
  auto p = test::perm(4, "(0,1,2)");
  auto g = test::perm(4, "(2,3)");
  CHECK(conjugate(p, g) == g.inverse() * p * g);
  CHECK(render(conjugate(p, g)) == "(0,1,3)");
}

TEST_CASE("powers") {
  auto p = test::perm(7, "(0,1,2,3,4,5,6)");
  CHECK(p.pow(7).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p.pow(3) == p * p * p);
}
