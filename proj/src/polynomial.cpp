#include "singlift/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace singlift {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Ring Ring::prime_field(Int p) {
  if (!is_prime(p)) throw std::invalid_argument("Ring: " + std::to_string(p) + " is not prime");
  return {Kind::PrimeField, p};
}

std::string Ring::str() const {
  switch (kind) {
    case Kind::Rationals: return "QQ";
    case Kind::Integers: return "ZZ";
    case Kind::PrimeField: return "GF(" + std::to_string(p) + ")";
  }
  return "?";
}

SparsePolynomial::SparsePolynomial(Ring ring, Int dim) : ring_(ring), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("SparsePolynomial: dimension must be >= 1");
}

Rational normalize_coefficient(const Ring& ring, const Rational& c) {
  switch (ring.kind) {
    case Ring::Kind::Rationals:
      return c;
    case Ring::Kind::Integers:
      if (!c.is_integer())
        throw std::invalid_argument("SparsePolynomial: non-integer coefficient over ZZ");
      return c;
    case Ring::Kind::PrimeField: {
      if (!c.is_integer())
        throw std::invalid_argument("SparsePolynomial: non-integer coefficient over GF(p)");
      mpz_class r;
      mpz_class p(static_cast<long>(ring.p));
      mpz_fdiv_r(r.get_mpz_t(), c.numerator().get_mpz_t(), p.get_mpz_t());
      return Rational(r);
    }
  }
  return c;
}

Rational SparsePolynomial::normalize(const Rational& c) const {
  return normalize_coefficient(ring_, c);
}

void SparsePolynomial::add_term(const ExponentVec& u, const Rational& c) {
  if (static_cast<Int>(u.size()) != dim_)
    throw std::invalid_argument("SparsePolynomial: exponent dimension mismatch");
  for (Int e : u)
    if (e < 0) throw std::invalid_argument("SparsePolynomial: negative exponent");
  auto it = terms_.find(u);
  Rational v = normalize(it == terms_.end() ? c : it->second + c);
  if (v.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(u, v);
  } else {
    it->second = v;
  }
}

SparsePolynomial SparsePolynomial::monomial(Ring ring, const ExponentVec& u, const Rational& c) {
  SparsePolynomial f(ring, static_cast<Int>(u.size()));
  f.add_term(u, c);
  return f;
}

SparsePolynomial SparsePolynomial::from_terms(
    Ring ring, Int dim, const std::vector<std::pair<ExponentVec, Rational>>& terms) {
  SparsePolynomial f(ring, dim);
  for (const auto& [u, c] : terms) f.add_term(u, c);
  return f;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  if (ring_ != o.ring_ || dim_ != o.dim_)
    throw std::invalid_argument("SparsePolynomial: ring/dimension mismatch in +");
  for (const auto& [u, c] : o.terms_) add_term(u, c);
  return *this;
}

Rational SparsePolynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<Int>(point.size()) != dim_)
    throw std::invalid_argument("SparsePolynomial: evaluation point dimension mismatch");
  Rational acc(0);
  for (const auto& [u, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (Int k = 0; k < u[i]; ++k) t *= point[i];
    acc += t;
  }
  return normalize(acc);
}

std::string SparsePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool constant = singlift::is_zero(u);
    if (constant || c != Rational(1)) {
      os << c.str();
      if (!constant) os << '*';
    }
    bool started = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      if (started) os << '*';
      started = true;
      os << 'x' << (i + 1);
      if (u[i] > 1) os << '^' << u[i];
    }
  }
  return os.str();
}

}  // namespace singlift
