#include "singlift/toric.hpp"

#include <stdexcept>

#include "singlift/polyhedra.hpp"

namespace singlift {

Int discrepancy(const WeightVector& w) { return w.coordinate_sum() - 1; }

Rational log_discrepancy(const WeightVector& w, const MultiIdeal& A) {
  if (w.dim() != A.dim()) throw std::invalid_argument("log_discrepancy: dimension mismatch");
  Rational a(w.coordinate_sum());
  for (const auto& f : A.factors())
    a -= f.exponent * Rational(val_w_ideal(w, f.ideal));
  return a;
}

std::optional<Rational> lct_ratio(const WeightVector& w, const MonomialIdeal& a) {
  Int v = val_w_ideal(w, a);
  if (v == 0) return std::nullopt;
  return Rational(w.coordinate_sum(), v);
}

}  // namespace singlift
