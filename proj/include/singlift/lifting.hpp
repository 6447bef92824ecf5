#pragma once

#include <optional>
#include <vector>

#include "singlift/exponent.hpp"
#include "singlift/polynomial.hpp"
#include "singlift/rational.hpp"

namespace singlift {

// One generator lifted from GF(p) to ZZ together with the data that makes the
// lift valuation-preserving: reduce_mod_p(lifted, p) == original, and when a
// weight is present val_w(lifted) = val_w(original) = truncation_degree.
struct LiftingRecord {
  Int p;
  SparsePolynomial original;  // over GF(p)
  SparsePolynomial lifted;    // over ZZ
  std::optional<WeightVector> weight;
  std::optional<Int> truncation_degree;
};

// Coefficient-wise lift by canonical residues in [0, p-1]. The support is
// unchanged, so every monomial valuation is automatically preserved.
SparsePolynomial lift_prime_field(const SparsePolynomial& f);

// Coefficient-wise reduction ZZ -> GF(p); terms that vanish mod p are dropped.
// Left inverse of lift_prime_field.
SparsePolynomial reduce_mod_p(const SparsePolynomial& F, Int p);

// Removes every term of w-weight < d from F. Valid only when d equals
// val_w(reduce_mod_p(F, p)), which forces all removed coefficients to be
// divisible by p; the reduction mod p is then unchanged and the result has
// w-valuation exactly d. Violations are reported with the offending term.
SparsePolynomial truncate_lifting(const SparsePolynomial& F, const WeightVector& w, Int d,
                                  Int p);

// Lifts each generator by lift_prime_field, truncates at d = val_w(generator),
// and asserts the valuation-preservation postconditions per record.
std::vector<LiftingRecord> lift_ideal_valuation_preserving(
    const std::vector<SparsePolynomial>& gens, const WeightVector& w);

}  // namespace singlift
