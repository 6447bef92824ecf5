#pragma once

#include <optional>

#include "singlift/ideal.hpp"
#include "singlift/rational.hpp"

namespace singlift {

// Discrepancy of the toric divisor with weight w over affine N-space:
// k = <w,1> - 1.
Int discrepancy(const WeightVector& w);

// Log discrepancy with respect to a multiideal:
// a(w) = <w,1> - sum_i e_i * val_w(a_i).
Rational log_discrepancy(const WeightVector& w, const MultiIdeal& A);

// Candidate lct value <w,1> / val_w(a) seen from one divisor. Divisors with
// val_w(a) = 0 do not constrain the threshold; they get nullopt
// (NotApplicable) and are excluded from minima by callers.
std::optional<Rational> lct_ratio(const WeightVector& w, const MonomialIdeal& a);

}  // namespace singlift
