#include "doctest.h"
#include "g2kl/error.hpp"
#include "g2kl/laurent.hpp"

using namespace g2kl;

TEST_CASE("arithmetic") {
  const LaurentPoly v = LaurentPoly::v();
  const LaurentPoly two = LaurentPoly::two();
  CHECK(two == v + LaurentPoly::monomial(1, -1));
  CHECK(two * two == LaurentPoly::monomial(1, 2) + 2 + LaurentPoly::monomial(1, -2));
  CHECK((two - two).is_zero());
  CHECK(pow(two, 3) == LaurentPoly::two_power(3));
  CHECK(LaurentPoly::monomial(0, 5).is_zero());
  CHECK((v * v).coeff(2) == 1);
  CHECK((v * v).coeff(1) == 0);
  CHECK(LaurentPoly::q_power(2) == pow(v, 4));
}

TEST_CASE("big coefficients stay exact") {
  LaurentPoly p = LaurentPoly::two_power(200);
  CHECK(p.coeff(0) == Integer("90548514656103281165404177077484163874504589675413336841320"));
  CHECK(p.degree() == 200);
  CHECK(p.valuation() == -200);
}

TEST_CASE("bar involution") {
  const LaurentPoly p = LaurentPoly::parse("3*v^2-v+7");
  CHECK(p.bar() == LaurentPoly::parse("3*v^-2-v^-1+7"));
  CHECK(p.bar().bar() == p);
  CHECK(LaurentPoly::two_power(5).is_bar_invariant());
  CHECK_FALSE(p.is_bar_invariant());
}

TEST_CASE("text round trip") {
  for (const char* s : {"0", "1", "-1", "v", "-v^-1", "v^2+2+v^-2", "-4*v^4", "12*v^3-v+5*v^-7"}) {
    CAPTURE(s);
    CHECK(LaurentPoly::parse(s).str() == s);
  }
  CHECK(LaurentPoly::parse(" 2*v^2 + v^2 ") == LaurentPoly::monomial(3, 2));
  CHECK_THROWS_AS(LaurentPoly::parse("v^"), Error);
  CHECK_THROWS_AS(LaurentPoly::parse("2**v"), Error);
  CHECK_THROWS_AS(LaurentPoly::parse("x"), Error);
}

TEST_CASE("[2]-basis") {
  const LaurentPoly p = LaurentPoly::from_two_basis({0, 0, 3, 0, -4, 0, 1});
  CHECK(two_str(p) == "[2]^6-4[2]^4+3[2]^2");
  CHECK(p.to_two_basis() == std::vector<Integer>{0, 0, 3, 0, -4, 0, 1});
  CHECK(two_str(LaurentPoly::two()) == "[2]");
  CHECK(two_str(LaurentPoly(1)) == "1");
  CHECK(two_str(LaurentPoly(2) * LaurentPoly::two_power(2)) == "2[2]^2");
  CHECK(two_str(LaurentPoly::from_two_basis({0, 1, 0, -3, 0, 1})) == "[2]^5-3[2]^3+[2]");
  CHECK_THROWS_AS(two_str(LaurentPoly::v()), Error);
  // [2]^6 - 4[2]^4 + 3[2]^2 has no v^5 term and leading term v^6.
  CHECK(p.coeff(6) == 1);
  CHECK(p.coeff(5) == 0);
}

TEST_CASE("q-polynomial view") {
  const LaurentPoly p = LaurentPoly::parse("v^4+3*v^2+1");
  CHECK(q_str(p) == "q^2+3*q+1");
  CHECK(q_degree(p) == 2);
  CHECK(q_coeff(p, 1) == 3);
  CHECK(q_str(LaurentPoly()) == "0");
  CHECK(q_degree(LaurentPoly()) == -1);
  CHECK_THROWS_AS(require_q_polynomial(LaurentPoly::v(), "test"), Error);
  CHECK_THROWS_AS(require_q_polynomial(LaurentPoly::monomial(1, -2), "test"), Error);
}
