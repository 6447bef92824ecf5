#include <doctest.h>

#include "singlift/lifting.hpp"
#include "singlift/polyhedra.hpp"

using namespace singlift;

namespace {

SparsePolynomial mkpoly(Ring ring, Int dim,
                        std::initializer_list<std::pair<ExponentVec, Rational>> ts) {
  SparsePolynomial f(ring, dim);
  for (const auto& [u, c] : ts) f.add_term(u, c);
  return f;
}

}  // namespace

TEST_CASE("reduce after lift is the identity on prime field polynomials") {
  Ring f7 = Ring::prime_field(7);
  SparsePolynomial f =
      mkpoly(f7, 2, {{{2, 0}, Rational(3)}, {{1, 1}, Rational(6)}, {{0, 0}, Rational(1)}});
  SparsePolynomial lifted = lift_prime_field(f);
  CHECK(lifted.ring() == Ring::integers());
  CHECK(reduce_mod_p(lifted, 7) == f);
  // canonical residues: coefficients land in [0, p-1]
  for (const auto& [u, c] : lifted.terms()) {
    CHECK(c.sign() >= 0);
    CHECK(c < Rational(7));
  }
  CHECK_THROWS_AS(lift_prime_field(lifted), std::invalid_argument);
}

TEST_CASE("reduction drops exactly the p-divisible terms") {
  SparsePolynomial F = mkpoly(Ring::integers(), 2,
                              {{{1, 0}, Rational(2)}, {{0, 1}, Rational(1)}, {{2, 0}, Rational(4)}});
  SparsePolynomial r2 = reduce_mod_p(F, 2);
  CHECK(r2 == mkpoly(Ring::prime_field(2), 2, {{{0, 1}, Rational(1)}}));
  SparsePolynomial r3 = reduce_mod_p(F, 3);
  CHECK(r3.terms().size() == 3);
  CHECK(r3.ring() == Ring::prime_field(3));
  CHECK_THROWS_AS(reduce_mod_p(r3, 3), std::invalid_argument);
  CHECK_THROWS_AS(reduce_mod_p(F, 4), std::invalid_argument);
}

TEST_CASE("truncation removes low terms whose coefficients vanish mod p") {
  // 2x + y with w = (1,2): the reduction mod 2 is y with valuation 2, so the
  // w-weight-1 term 2x must be cut.
  SparsePolynomial F =
      mkpoly(Ring::integers(), 2, {{{1, 0}, Rational(2)}, {{0, 1}, Rational(1)}});
  WeightVector w({1, 2});
  SparsePolynomial cut = truncate_lifting(F, w, 2, 2);
  CHECK(cut == mkpoly(Ring::integers(), 2, {{{0, 1}, Rational(1)}}));
  CHECK(*val_w_polynomial(w, cut) == 2);

  // nothing below the valuation: unchanged
  SparsePolynomial G =
      mkpoly(Ring::integers(), 2, {{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}});
  CHECK(truncate_lifting(G, WeightVector({1, 2}), 1, 3) == G);

  // 3x^2 + x^3 + y with w = (1,3): mod 3 the x^2 term dies, valuation 3
  SparsePolynomial H = mkpoly(Ring::integers(), 2,
                              {{{2, 0}, Rational(3)}, {{3, 0}, Rational(1)}, {{0, 1}, Rational(1)}});
  SparsePolynomial Hcut = truncate_lifting(H, WeightVector({1, 3}), 3, 3);
  CHECK(Hcut ==
        mkpoly(Ring::integers(), 2, {{{3, 0}, Rational(1)}, {{0, 1}, Rational(1)}}));
}

TEST_CASE("truncation rejects invalid targets with a diagnostic") {
  WeightVector w({1, 2});
  // low term 3x survives mod 2: cutting it would change the reduction
  SparsePolynomial bad =
      mkpoly(Ring::integers(), 2, {{{1, 0}, Rational(3)}, {{0, 1}, Rational(1)}});
  try {
    truncate_lifting(bad, w, 2, 2);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("3*x^(1,0)") != std::string::npos);
  }

  // declared degree does not match the reduction's valuation
  SparsePolynomial F =
      mkpoly(Ring::integers(), 2, {{{1, 0}, Rational(2)}, {{0, 1}, Rational(1)}});
  CHECK_THROWS_AS(truncate_lifting(F, w, 1, 2), std::invalid_argument);

  // reduction identically zero: no valuation to preserve
  SparsePolynomial Z = mkpoly(Ring::integers(), 2, {{{1, 0}, Rational(2)}});
  CHECK_THROWS_AS(truncate_lifting(Z, w, 1, 2), std::invalid_argument);

  // wrong coefficient ring
  SparsePolynomial P = mkpoly(Ring::prime_field(2), 2, {{{1, 0}, Rational(1)}});
  CHECK_THROWS_AS(truncate_lifting(P, w, 1, 2), std::invalid_argument);
}

TEST_CASE("ideal lifting preserves reductions, supports and valuations") {
  Ring f5 = Ring::prime_field(5);
  std::vector<SparsePolynomial> gens = {
      mkpoly(f5, 3, {{{2, 0, 0}, Rational(4)}, {{0, 1, 1}, Rational(2)}}),
      mkpoly(f5, 3, {{{0, 3, 0}, Rational(1)}}),
      mkpoly(f5, 3, {{{1, 1, 0}, Rational(3)}, {{0, 0, 2}, Rational(3)}}),
  };
  WeightVector w({2, 1, 3});
  std::vector<LiftingRecord> recs = lift_ideal_valuation_preserving(gens, w);
  REQUIRE(recs.size() == gens.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const LiftingRecord& r = recs[i];
    CHECK(r.p == 5);
    CHECK(r.original == gens[i]);
    CHECK(reduce_mod_p(r.lifted, 5) == gens[i]);
    REQUIRE(r.weight.has_value());
    REQUIRE(r.truncation_degree.has_value());
    CHECK(*val_w_polynomial(*r.weight, r.lifted) == *r.truncation_degree);
    CHECK(*val_w_polynomial(w, gens[i]) == *r.truncation_degree);
    // canonical lift: identical exponent support
    std::vector<ExponentVec> sup_orig, sup_lift;
    for (const auto& [u, c] : gens[i].terms()) sup_orig.push_back(u);
    for (const auto& [u, c] : r.lifted.terms()) sup_lift.push_back(u);
    CHECK(sup_orig == sup_lift);
  }

  CHECK_THROWS_AS(lift_ideal_valuation_preserving({}, w), std::invalid_argument);
  std::vector<SparsePolynomial> zero = {SparsePolynomial(f5, 3)};
  CHECK_THROWS_AS(lift_ideal_valuation_preserving(zero, w), std::invalid_argument);
  std::vector<SparsePolynomial> mixed = {gens[0],
                                          mkpoly(Ring::prime_field(7), 3, {{{1, 0, 0}, Rational(1)}})};
  CHECK_THROWS_AS(lift_ideal_valuation_preserving(mixed, w), std::invalid_argument);
}
