#include <doctest.h>

#include "singlift/polynomial.hpp"

using namespace singlift;

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(0));
  CHECK(!is_prime(91));  // 7 * 13
  CHECK_THROWS_AS(Ring::prime_field(4), std::invalid_argument);
  CHECK(Ring::prime_field(7).str() == "GF(7)");
  CHECK(Ring::rationals().str() == "QQ");
  CHECK(Ring::integers().str() == "ZZ");
}

TEST_CASE("terms cancel and normalize per ring") {
  SparsePolynomial f(Ring::rationals(), 2);
  f.add_term({1, 0}, Rational(1, 2));
  f.add_term({1, 0}, Rational(1, 2));
  f.add_term({0, 1}, Rational(3));
  f.add_term({0, 1}, Rational(-3));
  CHECK(f.term_count() == 1);
  CHECK(f.str() == "x1");

  SparsePolynomial g(Ring::prime_field(3), 1);
  g.add_term({1}, Rational(4));  // canonical residue 1
  CHECK(g.str() == "x1");
  g.add_term({1}, Rational(2));  // 1 + 2 = 0 mod 3
  CHECK(g.is_zero());

  SparsePolynomial h(Ring::integers(), 1);
  CHECK_THROWS_AS(h.add_term({0}, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("exact evaluation") {
  // x^2 y + 3/2
  SparsePolynomial f = SparsePolynomial::from_terms(
      Ring::rationals(), 2, {{{2, 1}, Rational(1)}, {{0, 0}, Rational(3, 2)}});
  CHECK(f.evaluate({Rational(1, 2), Rational(4)}) == Rational(5, 2));

  SparsePolynomial g = SparsePolynomial::from_terms(Ring::prime_field(5), 1,
                                                    {{{1}, Rational(3)}});
  CHECK(g.evaluate({Rational(4)}) == Rational(2));  // 12 mod 5
}

TEST_CASE("printing is lexicographic and stable") {
  SparsePolynomial f = SparsePolynomial::from_terms(
      Ring::integers(), 2,
      {{{0, 2}, Rational(2)}, {{1, 1}, Rational(1)}, {{0, 0}, Rational(7)}});
  CHECK(f.str() == "7 + 2*x2^2 + x1*x2");
  CHECK(SparsePolynomial(Ring::rationals(), 3).str() == "0");
}
