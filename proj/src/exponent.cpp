#include "singlift/exponent.hpp"

#include <sstream>
#include <stdexcept>

namespace singlift {

Int dot(const ExponentVec& a, const ExponentVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int total_degree(const ExponentVec& u) {
  Int s = 0;
  for (Int e : u) s += e;
  return s;
}

bool divides(const ExponentVec& a, const ExponentVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("divides: dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVec add(const ExponentVec& a, const ExponentVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool is_zero(const ExponentVec& u) {
  for (Int e : u)
    if (e != 0) return false;
  return true;
}

std::string vec_str(const std::vector<Int>& u) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) os << ',';
    os << u[i];
  }
  os << ')';
  return os.str();
}

WeightVector::WeightVector(std::vector<Int> entries) : w_(std::move(entries)) {
  if (w_.empty()) throw std::invalid_argument("WeightVector: empty");
  bool nonzero = false;
  for (Int x : w_) {
    if (x < 0) throw std::invalid_argument("WeightVector: negative entry");
    if (x > 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("WeightVector: all entries zero");
}

Int WeightVector::coordinate_sum() const {
  Int s = 0;
  for (Int x : w_) s += x;
  return s;
}

bool WeightVector::center_is_origin() const {
  for (Int x : w_)
    if (x < 1) return false;
  return true;
}

}  // namespace singlift
