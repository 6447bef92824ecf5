#pragma once

#include <string>
#include <vector>

#include "singlift/rational.hpp"

namespace singlift {

// Monomial exponent vector: N nonnegative integers, X^u = x_1^{u_1}...x_N^{u_N}.
using ExponentVec = std::vector<Int>;

Int dot(const ExponentVec& a, const ExponentVec& b);
Int total_degree(const ExponentVec& u);
// Componentwise a <= b, i.e. X^a divides X^b.
bool divides(const ExponentVec& a, const ExponentVec& b);
ExponentVec add(const ExponentVec& a, const ExponentVec& b);
bool is_zero(const ExponentVec& u);

// "(u_1,...,u_N)"
std::string vec_str(const std::vector<Int>& u);

// Weight vector of a monomial (toric) valuation: nonnegative, not all zero.
// Entries all >= 1 exactly when the associated divisor has center the origin.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Int> entries);

  Int dim() const { return static_cast<Int>(w_.size()); }
  const std::vector<Int>& entries() const { return w_; }
  Int operator[](std::size_t i) const { return w_[i]; }

  // <w, 1> = sum of entries.
  Int coordinate_sum() const;
  bool center_is_origin() const;  // all entries >= 1

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }
  friend bool operator<(const WeightVector& a, const WeightVector& b) { return a.w_ < b.w_; }

  std::string str() const { return vec_str(w_); }

 private:
  std::vector<Int> w_;
};

}  // namespace singlift
