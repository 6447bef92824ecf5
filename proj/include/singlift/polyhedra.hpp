#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "singlift/ideal.hpp"
#include "singlift/rational.hpp"

namespace singlift {

// Monomial valuation of a polynomial: min of <w,u> over the support.
// The zero polynomial has no support; that is reported as nullopt (+infinity),
// never as a number.
std::optional<Int> val_w_polynomial(const WeightVector& w, const SparsePolynomial& f);

// Valuation of a monomial ideal: min of <w,u> over the minimal generators.
Int val_w_ideal(const WeightVector& w, const MonomialIdeal& a);

// One non-coordinate facet {q : <normal,q> >= offset} of a Newton polyhedron.
// Normals are primitive (entry gcd 1) nonnegative integer vectors; the offset
// then equals the ideal's valuation at the normal, a positive integer.
struct Facet {
  std::vector<Int> normal;
  Int offset = 0;
  friend bool operator==(const Facet& a, const Facet& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

// Newt(a) = conv(generators) + nonnegative orthant. Facets are computed once
// on first use (thread-safe) and cached; the cache is shared across copies.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(MonomialIdeal a);

  const MonomialIdeal& ideal() const { return ideal_; }
  Int dim() const { return ideal_.dim(); }

  // Exact irredundant inequality description, orthant bounds omitted,
  // sorted lexicographically by normal.
  const std::vector<Facet>& facets() const;

  // Exact membership test via the facet description.
  bool contains(const std::vector<Rational>& q) const;

 private:
  MonomialIdeal ideal_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Independent membership route: exact feasibility of
// q >= sum mu_g u_g, mu >= 0, sum mu_g = 1 (used as a cross-check).
bool newton_contains_lp(const MonomialIdeal& a, const std::vector<Rational>& q);

struct LctResult {
  Rational value;
  // All facets attaining the minimum of <normal,1>/offset, sorted by normal.
  std::vector<Facet> attaining;
};

// Log canonical threshold of a monomial ideal at the origin: the facet-normal
// minimum of <w,1>/val_w(a). Internally cross-checked against the membership
// route (smallest lambda with lambda*(1,...,1) in Newt(a), found by exact LP);
// a disagreement would be an internal error.
LctResult lct_howald_detailed(const NewtonPolyhedron& P);
Rational lct_howald(const MonomialIdeal& a);

// The membership-route value on its own, exposed for consistency suites.
Rational lct_newton_lp(const MonomialIdeal& a);

}  // namespace singlift
