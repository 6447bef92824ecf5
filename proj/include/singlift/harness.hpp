#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "singlift/ideal.hpp"
#include "singlift/rational.hpp"

namespace singlift {

// FNV-1a, used for the inputs-digest column of suite reports.
std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

struct CaseRecord {
  std::string case_id;
  std::string inputs_digest;
  std::string route_a;
  std::string route_b;
  std::string status;  // "pass", "fail" or "inconclusive"
  std::string detail;  // witness data, shown in the summary for non-pass cases
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseRecord> records;

  // True only when every case passed; an inconclusive case blocks a pass.
  bool ok() const;
  // One record per line: suite, case-id, inputs-digest, route A, route B, status.
  std::string to_tsv() const;
  // Human-readable: counts plus details of every non-passing case.
  std::string summary() const;
};

// lct((x, y^i)) = (i+1)/i with md = i, unique minimal witness (i, 1), and
// <w,1> divisible by i+1 for every computing divisor, for i = 1..i_max.
SuiteReport suite_threshold_family(Int i_max, int threads = 1);

// mld_toric against mld_via_jets at the translated search bound, per case.
SuiteReport suite_mld_consistency(const std::vector<MultiIdeal>& cases, int threads = 1);

// lct_howald against lct_via_jets; the attaining jet order m must satisfy
// m + 1 = offset of some lct-computing facet.
SuiteReport suite_lct_consistency(const std::vector<MonomialIdeal>& cases, int threads = 1);

// Randomized valuation-preserving liftings: reduce-of-lift identity, val_w
// equality, lct/mld/height agreement across the lift, and adversarial
// non-canonical liftings repaired by truncation.
SuiteReport suite_lifting_descent(const std::vector<Int>& primes, Int trials,
                                  std::uint64_t seed, int threads = 1);

// Jet generation commutes with reduction mod p over a fixed corpus.
SuiteReport suite_jets_modp(const std::vector<Int>& primes, int threads = 1);

// Fixed corpora backing the route-equivalence suites.
std::vector<MultiIdeal> standard_mld_corpus();
std::vector<MonomialIdeal> standard_lct_corpus();

}  // namespace singlift
