#pragma once

#include <string>
#include <vector>

#include "singlift/exponent.hpp"
#include "singlift/polynomial.hpp"

namespace singlift {

// Proper nonzero monomial ideal in N variables, stored by its unique minimal
// monomial generators (an antichain under divisibility, lexicographically
// sorted). Construction minimalizes whatever generating set it is given.
class MonomialIdeal {
 public:
  MonomialIdeal(Int dim, std::vector<ExponentVec> generators);

  Int dim() const { return dim_; }
  const std::vector<ExponentVec>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }

  bool contains_monomial(const ExponentVec& u) const;
  // Max total degree over the minimal generators.
  Int max_generator_degree() const;

  std::vector<SparsePolynomial> generator_polynomials(Ring ring) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ < b.gens_;
  }

  std::string str() const;

 private:
  Int dim_;
  std::vector<ExponentVec> gens_;
};

// Drops generators divisible by another; result is the minimal generating set.
MonomialIdeal minimalize(Int dim, const std::vector<ExponentVec>& generators);

// Ideal containment a >= b (every generator of b lies in a).
bool contains(const MonomialIdeal& a, const MonomialIdeal& b);

// m^mu: all monomials of total degree mu in N variables.
MonomialIdeal power_of_maximal_ideal(Int N, Int mu);

struct MultiIdealFactor {
  MonomialIdeal ideal;
  Rational exponent;  // > 0
};

// Formal product a_1^{e_1} ... a_s^{e_s} of monomial ideals with positive
// rational exponents, all living in the same ambient dimension.
class MultiIdeal {
 public:
  explicit MultiIdeal(std::vector<MultiIdealFactor> factors);

  Int dim() const { return dim_; }
  std::size_t factor_count() const { return factors_.size(); }
  const std::vector<MultiIdealFactor>& factors() const { return factors_; }
  const MultiIdealFactor& factor(std::size_t i) const { return factors_.at(i); }

  std::string str() const;

 private:
  Int dim_;
  std::vector<MultiIdealFactor> factors_;
};

}  // namespace singlift
