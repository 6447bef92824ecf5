#include <doctest.h>

#include "singlift/jets.hpp"
#include "singlift/rng.hpp"

using namespace singlift;

namespace {

JetMonomial jm(std::initializer_list<std::pair<JetVariable, Int>> xs) {
  JetMonomial m;
  for (const auto& [v, e] : xs) m[v] = e;
  return m;
}

// Numeric oracle: substitute concrete truncated series into f directly and
// return the coefficients of t^0..t^m. No jet polynomials involved.
std::vector<Rational> substitute_series(const SparsePolynomial& f,
                                        const std::vector<std::vector<Rational>>& series,
                                        Int m) {
  auto mul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(static_cast<std::size_t>(m + 1), Rational(0));
    for (Int i = 0; i <= m; ++i)
      for (Int j = 0; i + j <= m; ++j)
        out[static_cast<std::size_t>(i + j)] +=
            a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return out;
  };
  std::vector<Rational> total(static_cast<std::size_t>(m + 1), Rational(0));
  for (const auto& [u, c] : f.terms()) {
    std::vector<Rational> term(static_cast<std::size_t>(m + 1), Rational(0));
    term[0] = c;
    for (std::size_t l = 0; l < u.size(); ++l)
      for (Int k = 0; k < u[l]; ++k) term = mul(term, series[l]);
    for (Int q = 0; q <= m; ++q)
      total[static_cast<std::size_t>(q)] += term[static_cast<std::size_t>(q)];
  }
  return total;
}

Rational mod_p(const Rational& x, Int p) { return normalize_coefficient(Ring::prime_field(p), x); }

}  // namespace

TEST_CASE("jet equations agree with direct series substitution") {
  SplitMix64 rng(420);
  for (int trial = 0; trial < 40; ++trial) {
    Int n = static_cast<Int>(rng.range(1, 3));
    Int m = static_cast<Int>(rng.range(0, 4));
    // random nonzero integer polynomial
    SparsePolynomial f(Ring::rationals(), n);
    Int nterms = static_cast<Int>(rng.range(1, 3));
    for (Int t = 0; t < nterms; ++t) {
      ExponentVec u(static_cast<std::size_t>(n));
      for (auto& x : u) x = static_cast<Int>(rng.range(0, 2));
      Rational c(static_cast<Int>(rng.range(1, 5)), static_cast<Int>(rng.range(1, 2)));
      f.add_term(u, c);
    }
    if (f.is_zero()) f.add_term(ExponentVec(static_cast<std::size_t>(n), 1), Rational(1));

    std::vector<std::vector<Rational>> point(static_cast<std::size_t>(n));
    for (auto& row : point) {
      row.resize(static_cast<std::size_t>(m + 1));
      for (auto& v : row) v = Rational(static_cast<Int>(rng.range(0, 6)) - 3);
    }
    std::vector<Rational> expect = substitute_series(f, point, m);
    std::vector<JetPolynomial> eqs = jet_equations(f, m);
    REQUIRE(eqs.size() == static_cast<std::size_t>(m + 1));
    for (Int q = 0; q <= m; ++q)
      CHECK(eqs[static_cast<std::size_t>(q)].evaluate(point) ==
            expect[static_cast<std::size_t>(q)]);
  }
}

TEST_CASE("jet equations over a prime field match reduced substitution") {
  SparsePolynomial f(Ring::prime_field(5), 2);
  f.add_term({2, 0}, Rational(3));
  f.add_term({1, 1}, Rational(4));
  f.add_term({0, 1}, Rational(2));
  std::vector<std::vector<Rational>> point = {{Rational(2), Rational(3), Rational(1)},
                                              {Rational(4), Rational(0), Rational(2)}};
  std::vector<Rational> raw = substitute_series(f, point, 2);
  std::vector<JetPolynomial> eqs = jet_equations(f, 2);
  for (Int q = 0; q <= 2; ++q)
    CHECK(eqs[static_cast<std::size_t>(q)].evaluate(point) ==
          mod_p(raw[static_cast<std::size_t>(q)], 5));
}

TEST_CASE("pinned jet equations") {
  SparsePolynomial xy(Ring::rationals(), 2);
  xy.add_term({1, 1}, Rational(1));
  auto exy = jet_equations(xy, 1);
  CHECK(exy[0].str() == "X_1_0*X_2_0");
  CHECK(exy[1].str() == "X_1_0*X_2_1 + X_1_1*X_2_0");

  SparsePolynomial x2(Ring::rationals(), 1);
  x2.add_term({2}, Rational(1));
  auto ex2 = jet_equations(x2, 2);
  CHECK(ex2[0].str() == "X_1_0^2");
  CHECK(ex2[1].str() == "2*X_1_0*X_1_1");
  CHECK(ex2[2].str() == "2*X_1_0*X_1_2 + X_1_1^2");

  // same polynomial in characteristic 2: the middle slot collapses but stays
  SparsePolynomial x2p(Ring::prime_field(2), 1);
  x2p.add_term({2}, Rational(1));
  auto ep = jet_equations(x2p, 2);
  REQUIRE(ep.size() == 3);
  CHECK(ep[0].str() == "X_1_0^2");
  CHECK(ep[1].is_zero());
  CHECK(ep[1].str() == "0");
  CHECK(ep[2].str() == "X_1_1^2");

  CHECK_THROWS_AS(jet_equations(SparsePolynomial(Ring::rationals(), 1), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(jet_equations(xy, -1), std::invalid_argument);
}

TEST_CASE("jet equations of a monomial are weighted homogeneous") {
  SparsePolynomial f(Ring::rationals(), 2);
  f.add_term({2, 1}, Rational(1));
  auto eqs = jet_equations(f, 4);
  for (Int q = 0; q <= 4; ++q) {
    for (const auto& [mono, c] : eqs[static_cast<std::size_t>(q)].terms()) {
      Int weight = 0;
      Int deg1 = 0;
      Int deg2 = 0;
      for (const auto& [var, e] : mono) {
        weight += var.order * e;
        (var.base_index == 1 ? deg1 : deg2) += e;
      }
      CHECK(weight == q);
      CHECK(deg1 == 2);
      CHECK(deg2 == 1);
    }
  }
}

TEST_CASE("jet monomial ordering follows the expanded variable sequence") {
  JetVariable a10{1, 0}, a11{1, 1}, a12{1, 2};
  CHECK(jet_monomial_less(jm({}), jm({{a10, 1}})));
  CHECK(jet_monomial_less(jm({{a10, 1}}), jm({{a10, 2}})));
  CHECK(jet_monomial_less(jm({{a10, 2}}), jm({{a10, 1}, {a11, 1}})));
  CHECK(!jet_monomial_less(jm({{a10, 1}, {a11, 1}}), jm({{a10, 2}})));
  CHECK(jet_monomial_less(jm({{a10, 1}, {a12, 1}}), jm({{a11, 2}})));
  CHECK(!jet_monomial_less(jm({{a11, 2}}), jm({{a10, 1}, {a12, 1}})));
  CHECK(!jet_monomial_less(jm({{a10, 1}}), jm({{a10, 1}})));
}

TEST_CASE("jet polynomial arithmetic and guards") {
  Ring qq = Ring::rationals();
  JetPolynomial f(qq, 2);
  f.add_term(jm({{JetVariable{1, 0}, 1}}), Rational(2));
  f.add_term(jm({{JetVariable{1, 0}, 1}}), Rational(-2));
  CHECK(f.is_zero());
  CHECK(f.max_order() == -1);

  JetPolynomial c = JetPolynomial::constant(qq, 2, Rational(3));
  CHECK(c.max_order() == -1);
  CHECK(c.str() == "3");
  JetPolynomial v = JetPolynomial::variable(qq, 2, 1, 3);
  CHECK(v.max_order() == 3);

  JetPolynomial g(Ring::prime_field(3), 1);
  g.add_term(jm({{JetVariable{1, 0}, 1}}), Rational(5));
  CHECK(g.str() == "2*X_1_0");

  CHECK_THROWS_AS(JetPolynomial::variable(qq, 2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(JetPolynomial::variable(qq, 2, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(v += g, std::invalid_argument);

  // evaluate treats missing orders as zero
  JetPolynomial h = JetPolynomial::variable(qq, 1, 1, 2);
  CHECK(h.evaluate({{Rational(7)}}) == Rational(0));
}

TEST_CASE("jet system layout, labels and fiber handling") {
  SparsePolynomial gx(Ring::rationals(), 2);
  gx.add_term({1, 0}, Rational(1));
  SparsePolynomial gy(Ring::rationals(), 2);
  gy.add_term({0, 1}, Rational(1));

  JetSystem sys = jet_system({{gx}, {gy}}, {2, 1});
  REQUIRE(sys.entries.size() == 5);  // 1*2 + 1*1 equations + 2 fiber rows
  CHECK(sys.max_order == 1);
  CHECK(!sys.fiber_only);
  CHECK(sys.entries[0].kind == JetSystemEntry::Kind::Equation);
  CHECK(sys.entries[0].factor == 0);
  CHECK(sys.entries[0].order == 0);
  CHECK(sys.entries[1].order == 1);
  CHECK(sys.entries[2].factor == 1);
  CHECK(sys.entries[3].kind == JetSystemEntry::Kind::Fiber);
  CHECK(sys.entries[3].generator == 0);
  CHECK(sys.entries[4].generator == 1);

  JetSystem fib = jet_system({{gx}}, {0});
  CHECK(fib.fiber_only);
  CHECK(fib.entries.size() == 2);
  CHECK(fib.max_order == 0);

  CHECK_THROWS_AS(jet_system({{gx}}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(jet_system({{gx}}, {-1}), std::invalid_argument);
}

TEST_CASE("reduction mod p commutes with forming jet equations") {
  SparsePolynomial f(Ring::integers(), 2);
  f.add_term({2, 0}, Rational(1));
  f.add_term({0, 1}, Rational(2));
  CHECK(commutation_check(f, 2, 2) == CommutationOutcome::Match);
  CHECK(commutation_check(f, 4, 3) == CommutationOutcome::Match);

  SparsePolynomial g(Ring::integers(), 2);
  g.add_term({1, 1}, Rational(3));
  CHECK(commutation_check(g, 1, 3) == CommutationOutcome::DegenerateLift);
  CHECK(commutation_check(g, 1, 2) == CommutationOutcome::Match);

  SparsePolynomial h(Ring::integers(), 2);
  h.add_term({2, 0}, Rational(1));
  h.add_term({0, 3}, Rational(1));
  CHECK(commutation_check(h, 3, 5) == CommutationOutcome::Match);
}

TEST_CASE("system reduction keeps labels and zero slots") {
  SparsePolynomial f(Ring::integers(), 1);
  f.add_term({2}, Rational(1));
  JetSystem sys = jet_system({{f}}, {3});
  JetSystem red = reduce_jet_system_mod_p(sys, 2);
  REQUIRE(red.entries.size() == sys.entries.size());
  CHECK(red.ring == Ring::prime_field(2));
  CHECK(red.entries[1].poly.is_zero());  // 2*X_1_0*X_1_1 dies mod 2
  for (std::size_t i = 0; i < red.entries.size(); ++i) {
    CHECK(red.entries[i].kind == sys.entries[i].kind);
    CHECK(red.entries[i].factor == sys.entries[i].factor);
    CHECK(red.entries[i].generator == sys.entries[i].generator);
    CHECK(red.entries[i].order == sys.entries[i].order);
  }
  CHECK_THROWS_AS(reduce_jet_system_mod_p(red, 2), std::invalid_argument);
}

TEST_CASE("textual export is byte-stable") {
  SparsePolynomial gx(Ring::rationals(), 2);
  gx.add_term({1, 0}, Rational(1));
  JetSystem sys = jet_system({{gx}}, {2});
  CHECK(export_cas(sys) ==
        "vars: X_1_0 X_1_1 X_2_0 X_2_1\n"
        "poly[0]: X_1_0\n"
        "poly[1]: X_1_1\n"
        "poly[2]: X_1_0\n"
        "poly[3]: X_2_0\n");

  SparsePolynomial gxy(Ring::rationals(), 2);
  gxy.add_term({1, 1}, Rational(1));
  JetSystem prod = jet_system({{gxy}}, {1});
  CHECK(export_cas(prod) ==
        "vars: X_1_0 X_2_0\n"
        "poly[0]: X_1_0*X_2_0\n"
        "poly[1]: X_1_0\n"
        "poly[2]: X_2_0\n");

  SparsePolynomial x2p(Ring::prime_field(2), 1);
  x2p.add_term({2}, Rational(1));
  CHECK(export_cas(jet_equations(x2p, 2), 1, 2) ==
        "vars: X_1_0 X_1_1 X_1_2\n"
        "poly[0]: X_1_0^2\n"
        "poly[1]: 0\n"
        "poly[2]: X_1_1^2\n");
}
