#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "singlift/exponent.hpp"
#include "singlift/rational.hpp"

namespace singlift {

bool is_prime(Int p);

// Coefficient ring tag: QQ, ZZ, or GF(p) with p prime (canonical residues 0..p-1).
struct Ring {
  enum class Kind { Rationals, Integers, PrimeField };
  Kind kind = Kind::Rationals;
  Int p = 0;

  static Ring rationals() { return {Kind::Rationals, 0}; }
  static Ring integers() { return {Kind::Integers, 0}; }
  static Ring prime_field(Int p);

  friend bool operator==(const Ring& a, const Ring& b) { return a.kind == b.kind && a.p == b.p; }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }
  std::string str() const;
};

// Coefficient admitted into the ring: identity over QQ, integrality check over
// ZZ, canonical residue over GF(p).
Rational normalize_coefficient(const Ring& ring, const Rational& c);

// Sparse multivariate polynomial with exact coefficients over a tagged ring.
// Terms are kept in lexicographic exponent order with no zero coefficients;
// GF(p) coefficients are canonical residues.
class SparsePolynomial {
 public:
  SparsePolynomial(Ring ring, Int dim);

  static SparsePolynomial monomial(Ring ring, const ExponentVec& u, const Rational& c = Rational(1));
  static SparsePolynomial from_terms(Ring ring, Int dim,
                                     const std::vector<std::pair<ExponentVec, Rational>>& terms);

  Ring ring() const { return ring_; }
  Int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExponentVec, Rational>& terms() const { return terms_; }

  // Adds c * X^u, normalizing per ring and erasing cancellations.
  void add_term(const ExponentVec& u, const Rational& c);

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }

  // Exact evaluation; over GF(p) the result is the canonical residue.
  Rational evaluate(const std::vector<Rational>& point) const;

  // Human-readable "x1^2*x2 + 3" form, terms in lexicographic order.
  std::string str() const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.ring_ == b.ring_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  Rational normalize(const Rational& c) const;
  Ring ring_;
  Int dim_;
  std::map<ExponentVec, Rational> terms_;
};

}  // namespace singlift
