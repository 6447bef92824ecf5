#include "singlift/harness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "singlift/invariants.hpp"
#include "singlift/jets.hpp"
#include "singlift/lifting.hpp"
#include "singlift/parallel.hpp"
#include "singlift/polyhedra.hpp"
#include "singlift/rng.hpp"

namespace singlift {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

bool SuiteReport::ok() const {
  if (records.empty()) return false;
  for (const auto& r : records)
    if (r.status != "pass") return false;
  return true;
}

std::string SuiteReport::to_tsv() const {
  std::ostringstream os;
  for (const auto& r : records)
    os << suite << '\t' << r.case_id << '\t' << r.inputs_digest << '\t' << r.route_a << '\t'
       << r.route_b << '\t' << r.status << '\n';
  return os.str();
}

std::string SuiteReport::summary() const {
  std::size_t pass = 0, fail = 0, inconclusive = 0;
  for (const auto& r : records) {
    if (r.status == "pass")
      ++pass;
    else if (r.status == "inconclusive")
      ++inconclusive;
    else
      ++fail;
  }
  std::ostringstream os;
  os << "suite " << suite << ": " << records.size() << " cases, " << pass << " pass, " << fail
     << " fail, " << inconclusive << " inconclusive\n";
  for (const auto& r : records) {
    if (r.status == "pass") continue;
    os << "  " << r.case_id << ' ' << r.status << ": route-A=" << r.route_a
       << " route-B=" << r.route_b;
    if (!r.detail.empty()) os << "  [" << r.detail << ']';
    os << '\n';
  }
  os << "result: " << (ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

namespace {

std::string pad(std::size_t i, int width = 2) {
  std::string s = std::to_string(i);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

std::string weight_str(const WeightVector& w) { return vec_str(w.entries()); }

}  // namespace

SuiteReport suite_threshold_family(Int i_max, int threads) {
  if (i_max < 1) throw std::invalid_argument("suite_threshold_family: i_max must be >= 1");
  auto per_i = parallel_map_indexed<std::vector<CaseRecord>>(
      static_cast<std::size_t>(i_max), threads, [&](std::size_t job) {
        Int i = static_cast<Int>(job) + 1;
        MonomialIdeal a(2, {{1, 0}, {0, i}});
        std::string digest = hex64(fnv1a64(a.str()));
        std::string tag = "i=" + pad(static_cast<std::size_t>(i));
        std::vector<CaseRecord> recs;

        Rational expect(i + 1, i);
        Rational got = lct_howald(a);
        recs.push_back({tag + "-lct", digest, got.str(), expect.str(),
                        got == expect ? "pass" : "fail", "ideal " + a.str()});

        MdResult md = md_lct_toric(a, i);
        bool md_ok = md.found && md.k_min == i && md.witnesses.size() == 1 &&
                     md.witnesses.front().entries() == std::vector<Int>{i, 1};
        std::ostringstream da;
        da << "witnesses";
        for (const auto& w : md.witnesses) da << ' ' << weight_str(w);
        recs.push_back({tag + "-md", digest, md.found ? std::to_string(md.k_min) : "not-found",
                        std::to_string(i), md_ok ? "pass" : "fail", da.str()});

        std::string viol;
        for (const auto& w : md.computing)
          if (w.coordinate_sum() % (i + 1) != 0) {
            viol = weight_str(w);
            break;
          }
        recs.push_back({tag + "-div", digest, viol.empty() ? "divisible" : "violation w=" + viol,
                        "divisible", viol.empty() && md.found ? "pass" : "fail",
                        "computing divisors: " + std::to_string(md.computing.size())});
        return recs;
      });
  SuiteReport rep;
  rep.suite = "threshold-family";
  for (auto& v : per_i)
    for (auto& r : v) rep.records.push_back(std::move(r));
  return rep;
}

SuiteReport suite_mld_consistency(const std::vector<MultiIdeal>& cases, int threads) {
  auto recs = parallel_map_indexed<CaseRecord>(cases.size(), threads, [&](std::size_t i) {
    const MultiIdeal& A = cases[i];
    InvariantResult toric = mld_toric(A);

    std::vector<Rational> evec;
    for (const auto& f : A.factors()) evec.push_back(f.exponent);
    Int k = toric.weight_witness->coordinate_sum() - 1;
    mpz_class s_ceil = bound_divisor_to_jet(k, evec).ceil();
    Int S = std::max<Int>(1, static_cast<Int>(s_ceil.get_si()));
    InvariantResult jets = mld_via_jets(A, S, 1, &toric);

    bool equal = toric.value == jets.value;
    bool dim_ok =
        toric.value.is_minus_infinity() || !(Rational(A.dim()) < toric.value.finite());
    std::string status = "pass";
    if (!equal)
      status = (toric.certificate == Certificate::Certified) ? "fail" : "inconclusive";
    else if (!dim_ok)
      status = "fail";

    std::ostringstream detail;
    detail << A.str() << "; toric w=" << weight_str(*toric.weight_witness)
           << (toric.certificate == Certificate::Certified ? " certified" : " box-bounded")
           << "; jet m=" << vec_str(*jets.jet_witness) << " bound=" << S;
    return CaseRecord{"mld-" + pad(i), hex64(fnv1a64(A.str())), toric.value.str(),
                      jets.value.str(), status, detail.str()};
  });
  SuiteReport rep;
  rep.suite = "mld-consistency";
  rep.records = std::move(recs);
  return rep;
}

SuiteReport suite_lct_consistency(const std::vector<MonomialIdeal>& cases, int threads) {
  auto recs = parallel_map_indexed<CaseRecord>(cases.size(), threads, [&](std::size_t i) {
    const MonomialIdeal& a = cases[i];
    NewtonPolyhedron P(a);
    LctResult det = lct_howald_detailed(P);
    Int max_offset = 0;
    for (const auto& f : det.attaining) max_offset = std::max(max_offset, f.offset);
    Int S = std::max<Int>(1, max_offset - 1);
    InvariantResult jets = lct_via_jets(a, S);

    bool equal = jets.value == ExtRational(det.value);
    Int m = jets.jet_witness->front();
    bool witness_ok = false;
    for (const auto& f : det.attaining) witness_ok = witness_ok || (f.offset == m + 1);

    std::ostringstream detail;
    detail << a.str() << "; attaining offsets";
    for (const auto& f : det.attaining) detail << ' ' << f.offset;
    detail << "; jet m=" << m << " bound=" << S;
    return CaseRecord{"lct-" + pad(i), hex64(fnv1a64(a.str())), det.value.str(),
                      jets.value.str(), equal && witness_ok ? "pass" : "fail", detail.str()};
  });
  SuiteReport rep;
  rep.suite = "lct-consistency";
  rep.records = std::move(recs);
  return rep;
}

namespace {

struct LiftTrial {
  Int p = 2;
  Int n = 2;
  std::vector<ExponentVec> gens;
  std::vector<Int> w;
  ExponentVec junk_u;
  Int junk_c = 1;
  std::string id;
};

CaseRecord run_lift_trial(const LiftTrial& t) {
  MonomialIdeal a(t.n, t.gens);
  WeightVector w(t.w);
  auto polys = a.generator_polynomials(Ring::prime_field(t.p));
  auto records = lift_ideal_valuation_preserving(polys, w);

  std::vector<ExponentVec> reduced_gens;
  for (const auto& r : records) {
    SparsePolynomial back = reduce_mod_p(r.lifted, t.p);
    for (const auto& [u, c] : back.terms()) reduced_gens.push_back(u);
  }
  MonomialIdeal b(t.n, reduced_gens);

  Rational lct_a = lct_howald(a), lct_b = lct_howald(b);
  InvariantResult mld_a = mld_toric(MultiIdeal({{a, Rational(1)}}));
  InvariantResult mld_b = mld_toric(MultiIdeal({{b, Rational(1)}}));
  Int ht_a = height_monomial(a), ht_b = height_monomial(b);

  // Adversarial non-canonical lifting of the first generator: add a p-divisible
  // term below the valuation and check the truncation repairs it.
  const LiftingRecord& r0 = records.front();
  Int d = *r0.truncation_degree;
  ExponentVec junk = t.junk_u;
  if (dot(w.entries(), junk) >= d) junk.assign(static_cast<std::size_t>(t.n), 0);
  SparsePolynomial noisy = r0.lifted;
  noisy.add_term(junk, Rational(t.p * t.junk_c));
  SparsePolynomial repaired = truncate_lifting(noisy, w, d, t.p);
  bool adversarial_ok =
      repaired == r0.lifted && *val_w_polynomial(w, repaired) == d;

  auto side = [&](const Rational& l, const InvariantResult& m, Int h) {
    std::ostringstream os;
    os << "lct=" << l.str() << ";mld=" << m.value.str() << ";ht=" << h << ";val=" << d;
    return os.str();
  };
  std::string route_a = side(lct_a, mld_a, ht_a);
  std::string route_b = side(lct_b, mld_b, ht_b);
  bool okay = (a == b) && route_a == route_b && adversarial_ok;
  std::ostringstream detail;
  detail << a.str() << "; w=" << weight_str(w) << "; p=" << t.p
         << (adversarial_ok ? "" : "; truncation repair failed");
  return CaseRecord{t.id, hex64(fnv1a64(a.str() + ";w=" + weight_str(w) +
                                        ";p=" + std::to_string(t.p))),
                    route_a, route_b, okay ? "pass" : "fail", detail.str()};
}

}  // namespace

SuiteReport suite_lifting_descent(const std::vector<Int>& primes, Int trials,
                                  std::uint64_t seed, int threads) {
  if (trials < 1) throw std::invalid_argument("suite_lifting_descent: trials must be >= 1");
  if (primes.empty()) throw std::invalid_argument("suite_lifting_descent: no primes");
  for (Int p : primes)
    if (!is_prime(p)) throw std::invalid_argument("suite_lifting_descent: non-prime modulus");

  SuiteReport rep;
  rep.suite = "lifting-descent";
  rep.seed = seed;

  {  // fixed case: the smallest truncation-repair instance
    SparsePolynomial f = SparsePolynomial::from_terms(
        Ring::integers(), 2, {{{1, 0}, Rational(2)}, {{0, 1}, Rational(1)}});
    WeightVector w(std::vector<Int>{1, 2});
    SparsePolynomial repaired = truncate_lifting(f, w, 2, 2);
    SparsePolynomial expect = SparsePolynomial::monomial(Ring::integers(), {0, 1});
    bool okay = repaired == expect && *val_w_polynomial(w, repaired) == 2;
    rep.records.push_back({"fixed-truncation", hex64(fnv1a64("2x+y;w=(1,2);p=2")),
                           "val=" + std::to_string(*val_w_polynomial(w, repaired)), "val=2",
                           okay ? "pass" : "fail", "truncate 2*x1 + x2 at d=2"});
  }
  {  // fixed case: height preserved across lift-reduce
    MonomialIdeal a(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    auto recs = lift_ideal_valuation_preserving(
        a.generator_polynomials(Ring::prime_field(2)), WeightVector(std::vector<Int>{1, 1, 1}));
    std::vector<ExponentVec> back;
    for (const auto& r : recs) {
      SparsePolynomial rb = reduce_mod_p(r.lifted, 2);
      for (const auto& [u, c] : rb.terms()) back.push_back(u);
    }
    MonomialIdeal b(3, back);
    bool okay = height_monomial(a) == 2 && height_monomial(b) == 2;
    rep.records.push_back({"fixed-height", hex64(fnv1a64(a.str() + ";p=2")),
                           "ht=" + std::to_string(height_monomial(a)),
                           "ht=" + std::to_string(height_monomial(b)),
                           okay ? "pass" : "fail", a.str()});
  }

  // Random inputs are drawn up front so the worker pool never touches the
  // generator; the job list alone fixes the report.
  std::vector<LiftTrial> plan;
  SplitMix64 rng(seed);
  for (Int p : primes) {
    for (Int t = 0; t < trials; ++t) {
      LiftTrial trial;
      trial.p = p;
      trial.n = (t % 3 == 2) ? 3 : 2;
      Int count = rng.range(1, 5);
      for (Int g = 0; g < count; ++g) {
        ExponentVec u(static_cast<std::size_t>(trial.n), 0);
        do {
          for (auto& x : u) x = rng.range(0, 4);
        } while (is_zero(u));
        trial.gens.push_back(u);
      }
      trial.w.resize(static_cast<std::size_t>(trial.n));
      for (auto& x : trial.w) x = rng.range(1, 4);
      trial.junk_u.resize(static_cast<std::size_t>(trial.n));
      for (auto& x : trial.junk_u) x = rng.range(0, 1);
      trial.junk_c = rng.range(1, 3);
      trial.id = "p" + std::to_string(p) + "-t" + pad(static_cast<std::size_t>(t));
      plan.push_back(std::move(trial));
    }
  }
  auto recs = parallel_map_indexed<CaseRecord>(
      plan.size(), threads, [&](std::size_t i) { return run_lift_trial(plan[i]); });
  for (auto& r : recs) rep.records.push_back(std::move(r));
  return rep;
}

namespace {

std::vector<SparsePolynomial> jets_corpus() {
  Ring zz = Ring::integers();
  auto P = [&](Int dim, std::vector<std::pair<ExponentVec, Rational>> ts) {
    return SparsePolynomial::from_terms(zz, dim, ts);
  };
  return {
      P(1, {{{2}, 1}}),                             // x^2
      P(2, {{{2, 0}, 1}, {{0, 1}, 2}}),             // x^2 + 2y
      P(2, {{{1, 1}, 3}}),                          // 3xy
      P(2, {{{3, 0}, 1}, {{1, 1}, 3}}),             // x^3 + 3xy
      P(3, {{{2, 1, 0}, 1}, {{0, 0, 2}, 4}}),       // x^2 y + 4z^2
      P(2, {{{4, 0}, 1}, {{0, 4}, 1}}),             // x^4 + y^4
      P(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}),// (x+y)^2 expanded
      P(1, {{{3}, 2}, {{1}, 5}, {{0}, 7}}),         // 2x^3 + 5x + 7
      P(3, {{{1, 1, 1}, 1}, {{0, 0, 3}, 1}}),       // xyz + z^3
      P(2, {{{2, 2}, 5}}),                          // 5x^2 y^2
      P(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}),  // x + y + z
      P(1, {{{4}, 13}, {{0}, 26}}),                 // 13x^4 + 26
  };
}

}  // namespace

SuiteReport suite_jets_modp(const std::vector<Int>& primes, int threads) {
  if (primes.empty()) throw std::invalid_argument("suite_jets_modp: no primes");
  for (Int p : primes)
    if (!is_prime(p)) throw std::invalid_argument("suite_jets_modp: non-prime modulus");
  std::vector<SparsePolynomial> corpus = jets_corpus();

  struct Job {
    std::size_t f;
    Int p;
    Int m;
  };
  std::vector<Job> jobs;
  for (std::size_t f = 0; f < corpus.size(); ++f)
    for (Int p : primes)
      for (Int m = 0; m <= 6; ++m) jobs.push_back({f, p, m});

  auto recs = parallel_map_indexed<CaseRecord>(jobs.size(), threads, [&](std::size_t j) {
    const Job& job = jobs[j];
    const SparsePolynomial& f = corpus[job.f];
    std::string input = f.str() + ";p=" + std::to_string(job.p) + ";m=" + std::to_string(job.m);
    std::string id = "f" + pad(job.f) + "-p" + std::to_string(job.p) + "-m" +
                     std::to_string(job.m);

    SparsePolynomial reduced = reduce_mod_p(f, job.p);
    if (reduced.is_zero())
      return CaseRecord{id, hex64(fnv1a64(input)), "DegenerateLift", "DegenerateLift", "pass",
                        "input vanishes mod p"};

    std::vector<JetPolynomial> over_z = jet_equations(f, job.m);
    std::vector<JetPolynomial> lhs;
    for (const auto& g : over_z) lhs.push_back(reduce_jet_polynomial_mod_p(g, job.p));
    std::vector<JetPolynomial> rhs = jet_equations(reduced, job.m);

    std::string da = hex64(fnv1a64(export_cas(lhs, f.dim(), job.m)));
    std::string db = hex64(fnv1a64(export_cas(rhs, f.dim(), job.m)));
    bool equal = lhs.size() == rhs.size();
    for (std::size_t q = 0; equal && q < lhs.size(); ++q) equal = lhs[q] == rhs[q];
    return CaseRecord{id, hex64(fnv1a64(input)), da, db, equal ? "pass" : "fail", f.str()};
  });
  SuiteReport rep;
  rep.suite = "jets-modp";
  rep.records = std::move(recs);
  return rep;
}

namespace {

MultiIdeal single(Int n, std::vector<ExponentVec> gens, Rational e) {
  return MultiIdeal({{MonomialIdeal(n, std::move(gens)), e}});
}

MultiIdeal pair(Int n, std::vector<ExponentVec> g1, Rational e1, std::vector<ExponentVec> g2,
                Rational e2) {
  return MultiIdeal(
      {{MonomialIdeal(n, std::move(g1)), e1}, {MonomialIdeal(n, std::move(g2)), e2}});
}

}  // namespace

std::vector<MultiIdeal> standard_mld_corpus() {
  std::vector<MultiIdeal> cases;
  // N = 2, one factor
  cases.push_back(single(2, {{1, 0}, {0, 1}}, Rational(1)));
  cases.push_back(single(2, {{1, 0}, {0, 1}}, Rational(1, 2)));
  cases.push_back(single(2, {{1, 0}, {0, 1}}, Rational(2)));
  cases.push_back(single(2, {{1, 0}, {0, 1}}, Rational(5, 2)));
  cases.push_back(single(2, {{1, 0}}, Rational(3)));
  cases.push_back(single(2, {{1, 0}}, Rational(1, 2)));
  cases.push_back(single(2, {{1, 0}}, Rational(2)));
  cases.push_back(single(2, {{2, 0}, {0, 2}}, Rational(1, 2)));
  cases.push_back(single(2, {{2, 0}, {1, 1}, {0, 3}}, Rational(1, 4)));
  cases.push_back(single(2, {{1, 0}, {0, 3}}, Rational(3, 4)));
  cases.push_back(single(2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}, Rational(1, 3)));
  cases.push_back(single(2, {{2, 0}, {0, 3}}, Rational(1, 2)));
  cases.push_back(single(2, {{1, 0}, {0, 2}}, Rational(3, 2)));
  cases.push_back(single(2, {{3, 0}, {0, 3}}, Rational(2, 3)));
  cases.push_back(single(2, {{4, 0}}, Rational(1, 4)));
  cases.push_back(single(2, {{2, 1}}, Rational(1, 2)));
  cases.push_back(single(2, {{1, 1}}, Rational(1)));
  cases.push_back(single(2, {{2, 0}, {1, 1}, {0, 2}}, Rational(5, 4)));
  // N = 2, two factors
  cases.push_back(pair(2, {{1, 0}}, Rational(1), {{0, 1}}, Rational(1)));
  cases.push_back(pair(2, {{1, 0}}, Rational(2), {{1, 0}, {0, 2}}, Rational(1)));
  cases.push_back(pair(2, {{1, 0}, {0, 1}}, Rational(1, 2), {{1, 0}}, Rational(1, 2)));
  cases.push_back(pair(2, {{1, 0}, {0, 1}}, Rational(1, 2), {{2, 0}, {1, 1}, {0, 2}},
                       Rational(1, 4)));
  cases.push_back(pair(2, {{2, 0}, {0, 1}}, Rational(1, 3), {{0, 1}}, Rational(2)));
  cases.push_back(pair(2, {{1, 0}, {0, 3}}, Rational(1, 2), {{2, 0}, {0, 1}}, Rational(1, 2)));
  // N = 3
  cases.push_back(single(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Rational(1)));
  cases.push_back(single(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Rational(3)));
  cases.push_back(single(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Rational(7, 2)));
  cases.push_back(single(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, Rational(1)));
  cases.push_back(single(3, {{1, 0, 0}}, Rational(2)));
  cases.push_back(single(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, Rational(3, 4)));
  cases.push_back(single(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Rational(5, 2)));
  cases.push_back(single(3, {{2, 0, 0}, {0, 1, 1}}, Rational(1, 2)));
  cases.push_back(single(3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}, Rational(4, 3)));
  return cases;
}

std::vector<MonomialIdeal> standard_lct_corpus() {
  std::set<MonomialIdeal> seen;
  for (const auto& A : standard_mld_corpus())
    for (const auto& f : A.factors()) seen.insert(f.ideal);
  // Extras beyond the route-equivalence corpus
  seen.insert(MonomialIdeal(2, {{2, 1}, {1, 3}}));
  seen.insert(MonomialIdeal(2, {{1, 0}, {0, 5}}));
  seen.insert(MonomialIdeal(2, {{1, 0}, {0, 10}}));
  seen.insert(MonomialIdeal(2, {{3, 0}, {0, 2}}));
  seen.insert(MonomialIdeal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}));
  for (Int mu = 2; mu <= 4; ++mu) {
    seen.insert(power_of_maximal_ideal(2, mu));
    seen.insert(power_of_maximal_ideal(3, mu));
  }
  return std::vector<MonomialIdeal>(seen.begin(), seen.end());
}

}  // namespace singlift
