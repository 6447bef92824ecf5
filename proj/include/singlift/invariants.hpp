#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singlift/ideal.hpp"
#include "singlift/polyhedra.hpp"
#include "singlift/rational.hpp"

namespace singlift {

// Jet order multivector (m_1,...,m_s), one entry per multiideal factor.
using JetOrderVec = std::vector<Int>;

enum class Certificate { Certified, BoxBounded };

// Common result shape for the searched invariants. A MinusInfinity value
// always carries a weight witness w >= 1 with log_discrepancy(w) < 0;
// Certified finite results carry a lower bound equal to the value.
struct InvariantResult {
  ExtRational value;
  std::optional<WeightVector> weight_witness;
  std::optional<JetOrderVec> jet_witness;
  Certificate certificate = Certificate::BoxBounded;
  Int box = 0;  // box /search bound in force
  std::optional<Rational> lower_bound;
  std::string route;
};

struct ContactResult {
  Int codim = 0;
  std::vector<Int> witness;  // optimal weight vector (zero vector for the trivial case)
};

// codim of the intersection of Cont^{>= m_i}(a_i) (intersected with the fiber
// over the origin if origin_fiber), as the exact integer program
//   min <w,1>  s.t.  val_w(a_i) >= m_i for all i,  w >= 1 (origin_fiber)
//                    or w >= 0, w != 0 (otherwise).
// Solved by graded enumeration: totals T ascending, compositions of T in lex
// order, pruned per generator row; the first hit is the optimum with the
// lex-smallest witness. A feasible point M*(1,...,1), M = max m_i, caps the
// search at T = N*M. All m_i = 0 with origin_fiber = false is the whole space
// and returns codim 0.
ContactResult contact_codim(const MultiIdeal& A, const JetOrderVec& m, bool origin_fiber);

// s_m = contact_codim(A, m, origin_fiber = true) - sum_i e_i m_i.
Rational s_m(const MultiIdeal& A, const JetOrderVec& m);

// z_m = contact_codim((a)^1, (m+1), origin_fiber = false) / (m+1).
Rational z_m(const MonomialIdeal& a, Int m);

// Certified minimum of log_discrepancy(w, A) over integer w >= (1,...,1).
// Selection regions (one generator per factor) make the objective linear;
// exact ray analysis per region decides MinusInfinity, per-region rational LP
// minima give a global lower bound, and a box enumeration up to
// box_override.value_or(N*(1 + ceil(sum_i e_i D_i))) produces the candidate
// with its lex-min witness. Certified iff candidate == lower bound rounded up
// to the value lattice (multiples of 1 / lcm of exponent denominators).
InvariantResult mld_toric(const MultiIdeal& A, std::optional<Int> box_override = {},
                          int threads = 1);

// Minimum of s_m over |m| <= search_bound, lex-min witness. Certified when it
// matches a certified mld_toric value (pass toric_hint to reuse one already
// computed); MinusInfinity when the sweep finds a negative value.
InvariantResult mld_via_jets(const MultiIdeal& A, Int search_bound, int threads = 1,
                             const InvariantResult* toric_hint = nullptr);

// Minimum of z_m over 0 <= m <= search_bound; Certified when equal to
// lct_howald(a). Witness is the smallest attaining m.
InvariantResult lct_via_jets(const MonomialIdeal& a, Int search_bound);

// Minimal discrepancy among toric divisors computing lct(a), searched over
// <w,1> <= k_cap + 1. found = false means NotFound at this cap.
struct MdResult {
  bool found = false;
  Int k_min = 0;
  std::vector<WeightVector> witnesses;  // all w attaining k_min, lex order
  std::vector<WeightVector> computing;  // all computing divisors in range, lex order
};
MdResult md_lct_toric(const MonomialIdeal& a, Int k_cap);

// Height of a monomial ideal = minimal vertex cover of the support
// hypergraph: smallest S with every generator supported on S.
Int height_monomial(const MonomialIdeal& a);

// (ell + 1 + max e) / min e.
Rational bound_divisor_to_jet(Int ell, const std::vector<Rational>& e);
// N - 1 + ell_prime * max e.
Rational bound_jet_to_divisor(const Rational& ell_prime, Int N, const std::vector<Rational>& e);
// (L_prime + 1) * N - 1.
Int bound_lct_translation(Int L_prime, Int N);

// Scan of all (or sampled) monomial ideals a with m^mu <= a <= m, recording
// md_lct_toric(a, k_cap) per ideal and the observed maximum.
struct ScanEntry {
  MonomialIdeal ideal;
  Rational lct;
  std::optional<Int> md;  // nullopt = Unresolved at cap
};
struct ScanReport {
  Int N = 0, mu = 0, cap = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  Int samples = 0;
  std::vector<ScanEntry> entries;
  std::optional<Int> max_md;
  std::vector<MonomialIdeal> argmax;      // ideals attaining max_md
  std::vector<MonomialIdeal> unresolved;  // NotFound at cap

  std::string to_text() const;
  std::string to_tsv() const;
};
ScanReport scan_md_bound(Int N, Int mu, Int k_cap, std::optional<std::uint64_t> seed = {},
                         Int samples = 64, int threads = 1);

}  // namespace singlift
