#include "singlift/lifting.hpp"

#include <sstream>
#include <stdexcept>

#include "singlift/polyhedra.hpp"

namespace singlift {

namespace {

std::string term_str(const ExponentVec& u, const Rational& c) {
  std::ostringstream os;
  os << c.str() << "*x^" << vec_str(u);
  return os.str();
}

}  // namespace

SparsePolynomial lift_prime_field(const SparsePolynomial& f) {
  if (f.ring().kind != Ring::Kind::PrimeField)
    throw std::invalid_argument("lift_prime_field: input must be over a prime field");
  SparsePolynomial out(Ring::integers(), f.dim());
  for (const auto& [u, c] : f.terms()) out.add_term(u, c);
  return out;
}

SparsePolynomial reduce_mod_p(const SparsePolynomial& F, Int p) {
  if (F.ring().kind != Ring::Kind::Integers)
    throw std::invalid_argument("reduce_mod_p: input must have integer coefficients");
  SparsePolynomial out(Ring::prime_field(p), F.dim());
  for (const auto& [u, c] : F.terms()) out.add_term(u, c);
  return out;
}

SparsePolynomial truncate_lifting(const SparsePolynomial& F, const WeightVector& w, Int d,
                                  Int p) {
  if (F.ring().kind != Ring::Kind::Integers)
    throw std::invalid_argument("truncate_lifting: input must have integer coefficients");
  if (w.dim() != F.dim()) throw std::invalid_argument("truncate_lifting: weight dimension");
  SparsePolynomial reduced = reduce_mod_p(F, p);  // also validates p
  if (reduced.is_zero())
    throw std::invalid_argument("truncate_lifting: reduction mod p is zero, no valuation");

  mpz_class pz(static_cast<long>(p));
  for (const auto& [u, c] : F.terms()) {
    if (dot(w.entries(), u) >= d) continue;
    if (!mpz_divisible_p(c.numerator().get_mpz_t(), pz.get_mpz_t()))
      throw std::invalid_argument(
          "truncate_lifting: term below the cut is not divisible by p: " + term_str(u, c));
  }
  Int d_star = *val_w_polynomial(w, reduced);
  if (d_star != d) {
    std::ostringstream os;
    os << "truncate_lifting: d = " << d << " but val_w of the reduction is " << d_star;
    throw std::invalid_argument(os.str());
  }

  SparsePolynomial out(Ring::integers(), F.dim());
  for (const auto& [u, c] : F.terms())
    if (dot(w.entries(), u) >= d) out.add_term(u, c);
  return out;
}

std::vector<LiftingRecord> lift_ideal_valuation_preserving(
    const std::vector<SparsePolynomial>& gens, const WeightVector& w) {
  if (gens.empty())
    throw std::invalid_argument("lift_ideal_valuation_preserving: no generators");
  std::vector<LiftingRecord> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.ring().kind != Ring::Kind::PrimeField || g.ring() != gens.front().ring())
      throw std::invalid_argument(
          "lift_ideal_valuation_preserving: generators must share one prime field");
    if (g.is_zero())
      throw std::invalid_argument("lift_ideal_valuation_preserving: zero generator");
    if (g.dim() != w.dim())
      throw std::invalid_argument("lift_ideal_valuation_preserving: weight dimension");
    Int p = g.ring().p;
    Int d = *val_w_polynomial(w, g);
    SparsePolynomial lifted = truncate_lifting(lift_prime_field(g), w, d, p);
    if (!(reduce_mod_p(lifted, p) == g))
      throw std::logic_error("lift_ideal_valuation_preserving: reduction does not recover input");
    if (*val_w_polynomial(w, lifted) != d)
      throw std::logic_error("lift_ideal_valuation_preserving: valuation not preserved");
    out.push_back(LiftingRecord{p, g, lifted, w, d});
  }
  return out;
}

}  // namespace singlift
