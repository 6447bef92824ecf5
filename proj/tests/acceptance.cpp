// End-to-end acceptance gate. Each criterion prints one [PASS]/[FAIL] line;
// the process exits nonzero if any criterion fails. Checks are always on.
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "singlift/cli.hpp"
#include "singlift/harness.hpp"
#include "singlift/invariants.hpp"
#include "singlift/polyhedra.hpp"
#include "singlift/rng.hpp"
#include "singlift/toric.hpp"

using namespace singlift;

namespace {

struct Criterion {
  std::string label;
  bool passed = true;
  std::ostringstream why;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Criterion(std::string l) : label(std::move(l)) {}

  void require(bool cond, const std::string& msg) {
    if (cond) return;
    if (passed) passed = false;
    why << "\n    " << msg;
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  void budget(double limit) {
    double t = seconds();
    if (t > limit) {
      std::ostringstream os;
      os << "runtime " << t << "s exceeds budget " << limit << "s";
      require(false, os.str());
    }
  }
  bool report() {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << seconds();
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << label << " (" << os.str() << "s)"
              << why.str() << "\n";
    return passed;
  }
};

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_command(args, out, err);
  return out.str() + err.str();
}

bool criterion_family() {
  Criterion c("1 threshold family (x, y^i): value, minimal discrepancy, divisibility");
  for (Int i = 1; i <= 20; ++i) {
    MonomialIdeal a(2, {{1, 0}, {0, i}});
    Rational lct = lct_howald(a);
    c.require(lct == Rational(i + 1, i),
              "lct((x, y^" + std::to_string(i) + ")) = " + lct.str());
    MdResult md = md_lct_toric(a, 2 * (i + 1));
    c.require(md.found, "no computing divisor found at i=" + std::to_string(i));
    if (!md.found) continue;
    c.require(md.k_min == i, "k_min = " + std::to_string(md.k_min) + " at i=" + std::to_string(i));
    c.require(md.witnesses.size() == 1 &&
                  md.witnesses.front().entries() == std::vector<Int>{i, 1},
              "wrong witness at i=" + std::to_string(i));
    c.require(md.computing.size() >= 2, "divisibility check vacuous at i=" + std::to_string(i));
    for (const auto& w : md.computing)
      c.require(w.coordinate_sum() % (i + 1) == 0,
                "computing divisor with sum " + std::to_string(w.coordinate_sum()) +
                    " at i=" + std::to_string(i));
  }
  c.budget(5.0);
  return c.report();
}

bool criterion_maximal_powers() {
  Criterion c("2 powers of the maximal ideal: lct = N/mu on both routes");
  for (Int n = 1; n <= 4; ++n) {
    for (Int mu = 1; mu <= 5; ++mu) {
      MonomialIdeal a = power_of_maximal_ideal(n, mu);
      Rational expect(n, mu);
      Rational howald = lct_howald(a);
      InvariantResult jets = lct_via_jets(a, 4 * mu);
      std::string tag = " at N=" + std::to_string(n) + " mu=" + std::to_string(mu);
      c.require(howald == expect, "facet route gives " + howald.str() + tag);
      c.require(jets.value == ExtRational(expect), "jet route gives " + jets.value.str() + tag);
      c.require(jets.certificate == Certificate::Certified, "jet route uncertified" + tag);
    }
  }
  c.budget(5.0);
  return c.report();
}

bool criterion_mld_routes() {
  Criterion c("3 mld route equivalence on the standard corpus");
  std::vector<MultiIdeal> corpus = standard_mld_corpus();
  c.require(corpus.size() >= 30, "corpus too small: " + std::to_string(corpus.size()));
  SuiteReport rep = suite_mld_consistency(corpus);
  c.require(rep.records.size() == corpus.size(), "missing records");
  for (const auto& r : rep.records)
    c.require(r.status == "pass", r.case_id + " " + r.status + ": " + r.detail);

  std::size_t finite = 0, certified = 0;
  for (const auto& A : corpus) {
    InvariantResult t = mld_toric(A);
    if (t.value.is_minus_infinity()) continue;
    ++finite;
    if (t.certificate == Certificate::Certified) ++certified;
  }
  c.require(finite > 0, "no finite cases in the corpus");
  c.require(10 * certified >= 9 * finite,
            "certified on " + std::to_string(certified) + "/" + std::to_string(finite) +
                " finite cases, below 90%");
  c.budget(60.0);
  return c.report();
}

bool criterion_lct_routes() {
  Criterion c("4 lct route equivalence with facet-offset jet witnesses");
  std::vector<MonomialIdeal> corpus = standard_lct_corpus();
  c.require(corpus.size() >= 20, "corpus too small: " + std::to_string(corpus.size()));
  SuiteReport rep = suite_lct_consistency(corpus);
  c.require(rep.records.size() == corpus.size(), "missing records");
  for (const auto& r : rep.records)
    c.require(r.status == "pass", r.case_id + " " + r.status + ": " + r.detail);
  return c.report();
}

bool criterion_inequality() {
  Criterion c("5 jet codimension upper bound and dimension bound on mld");
  std::vector<MultiIdeal> corpus = standard_mld_corpus();
  SplitMix64 rng(1903);
  int tried = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const MultiIdeal& A = corpus[rng.below(corpus.size())];
    std::vector<Int> entries(static_cast<std::size_t>(A.dim()));
    for (auto& x : entries) x = static_cast<Int>(rng.range(1, 4));
    WeightVector w(entries);
    JetOrderVec m;
    Rational rhs(0);
    for (Int x : entries) rhs += Rational(x);
    for (const auto& f : A.factors()) {
      Int cap = val_w_ideal(w, f.ideal);
      Int mi = rng.range(0, cap);
      m.push_back(mi);
      rhs -= f.exponent * Rational(mi);
    }
    Rational s = s_m(A, m);
    ++tried;
    if (s > rhs) {
      std::ostringstream os;
      os << "s_m = " << s.str() << " > " << rhs.str() << " for " << A.str() << " at m="
         << vec_str(m) << " w=" << vec_str(entries);
      c.require(false, os.str());
    }
  }
  c.require(tried == 200, "trial count");

  for (const auto& A : corpus) {
    InvariantResult t = mld_toric(A);
    if (t.value.is_minus_infinity()) continue;
    c.require(!(Rational(A.dim()) < t.value.finite()),
              "finite mld " + t.value.str() + " exceeds N for " + A.str());
  }
  return c.report();
}

bool criterion_jet_commutation() {
  Criterion c("6 jet equations commute with reduction mod p, slot by slot");
  SuiteReport rep = suite_jets_modp({2, 3, 5, 7, 13});
  c.require(rep.records.size() >= 12 * 5 * 7, "incomplete sweep");
  for (const auto& r : rep.records)
    c.require(r.status == "pass", r.case_id + " " + r.status + ": " + r.detail);
  c.budget(30.0);
  return c.report();
}

bool criterion_lifting() {
  Criterion c("7 valuation-preserving lifting round trips and invariant descent");
  SuiteReport rep = suite_lifting_descent({2, 3, 5, 7, 13}, 50, 1);
  c.require(rep.records.size() == 2 + 5 * 50, "unexpected record count");
  for (const auto& r : rep.records)
    c.require(r.status == "pass", r.case_id + " " + r.status + ": " + r.detail);
  return c.report();
}

bool criterion_bounds() {
  Criterion c("8 bound translation closed forms on tabulated instances");
  using V = std::vector<Rational>;
  const Rational h(1, 2);
  struct D2J {
    Int ell;
    V e;
    Rational expect;
  };
  std::vector<D2J> d2j = {
      {5, V{Rational(1)}, Rational(7)},
      {5, V{h, Rational(2)}, Rational(16)},
      {0, V{Rational(1)}, Rational(2)},
      {3, V{Rational(1, 3)}, Rational(13)},
      {2, V{Rational(3, 4), h}, Rational(15, 2)},
      {1, V{Rational(2)}, Rational(2)},
      {4, V{Rational(1), Rational(1), Rational(1)}, Rational(6)},
      {7, V{h}, Rational(17)},
      {0, V{Rational(1, 4)}, Rational(5)},
      {6, V{Rational(3, 2), Rational(5, 2)}, Rational(19, 3)},
  };
  for (const auto& t : d2j) {
    Rational got = bound_divisor_to_jet(t.ell, t.e);
    c.require(got == t.expect, "divisor-to-jet(" + std::to_string(t.ell) + ") = " + got.str() +
                                   ", expected " + t.expect.str());
  }

  struct J2D {
    Rational lp;
    Int n;
    V e;
    Rational expect;
  };
  std::vector<J2D> j2d = {
      {Rational(4), 2, V{Rational(1)}, Rational(5)},
      {Rational(16), 2, V{h, Rational(2)}, Rational(33)},
      {Rational(0), 1, V{Rational(1)}, Rational(0)},
      {Rational(7, 2), 3, V{Rational(2, 3)}, Rational(13, 3)},
      {Rational(10), 2, V{Rational(3)}, Rational(31)},
      {Rational(1), 4, V{h}, Rational(7, 2)},
      {Rational(5), 3, V{Rational(1), Rational(2)}, Rational(12)},
      {Rational(2), 2, V{Rational(1, 4)}, Rational(3, 2)},
      {Rational(9), 1, V{Rational(1)}, Rational(9)},
      {Rational(6), 5, V{Rational(2), Rational(3)}, Rational(22)},
  };
  for (const auto& t : j2d) {
    Rational got = bound_jet_to_divisor(t.lp, t.n, t.e);
    c.require(got == t.expect, "jet-to-divisor(" + t.lp.str() + ", N=" + std::to_string(t.n) +
                                   ") = " + got.str() + ", expected " + t.expect.str());
  }

  struct LT {
    Int lp, n, expect;
  };
  std::vector<LT> lt = {{3, 2, 7},  {1, 1, 1},  {10, 4, 43}, {2, 3, 8},  {1, 2, 3},
                        {5, 2, 11}, {4, 3, 14}, {7, 1, 7},   {2, 5, 14}, {6, 4, 27}};
  for (const auto& t : lt) {
    Int got = bound_lct_translation(t.lp, t.n);
    c.require(got == t.expect, "lct-translation(" + std::to_string(t.lp) + ", " +
                                   std::to_string(t.n) + ") = " + std::to_string(got));
  }
  return c.report();
}

bool criterion_scan() {
  Criterion c("9 exhaustive scan between m^2 and m resolves and is stable");
  int code1 = 0, code2 = 0, code3 = 0;
  std::string a = run_cli({"scan", "2", "2", "--cap", "8"}, code1);
  std::string b = run_cli({"scan", "2", "2", "--cap", "8"}, code2);
  std::string t = run_cli({"scan", "2", "2", "--cap", "8", "--threads", "8"}, code3);
  c.require(code1 == 0 && code2 == 0 && code3 == 0, "nonzero exit status");
  c.require(a.find("mode=exhaustive") != std::string::npos, "not exhaustive");
  c.require(a.find("ideals=4") != std::string::npos, "wrong ideal count");
  c.require(a.find("unresolved 0") != std::string::npos, "unresolved cases remain");
  c.require(a.find("max-md 2") != std::string::npos, "unexpected maximum");
  c.require(a == b, "repeat run differs");
  c.require(a == t, "threaded run differs");
  return c.report();
}

bool criterion_determinism() {
  Criterion c("10 suite reports are byte-identical across runs and thread counts");
  const std::vector<std::string> suites = {"threshold-family", "mld-consistency",
                                           "lct-consistency", "lifting-descent", "jets-modp"};
  for (const auto& name : suites) {
    int c1 = 0, c2 = 0, c3 = 0;
    std::vector<std::string> base = {"suite", name, "--seed", "1", "--format", "tsv"};
    std::string r1 = run_cli(base, c1);
    std::string r2 = run_cli(base, c2);
    std::vector<std::string> threaded = base;
    threaded.push_back("--threads");
    threaded.push_back("8");
    std::string r3 = run_cli(threaded, c3);
    c.require(c1 == 0, name + " exits " + std::to_string(c1));
    c.require(c1 == c2 && c2 == c3, name + " exit codes differ");
    c.require(r1 == r2, name + " differs between identical runs");
    c.require(r1 == r3, name + " differs at --threads 8");
  }
  return c.report();
}

}  // namespace

int main() {
  bool ok = true;
  ok &= criterion_family();
  ok &= criterion_maximal_powers();
  ok &= criterion_mld_routes();
  ok &= criterion_lct_routes();
  ok &= criterion_inequality();
  ok &= criterion_jet_commutation();
  ok &= criterion_lifting();
  ok &= criterion_bounds();
  ok &= criterion_scan();
  ok &= criterion_determinism();
  std::cout << (ok ? "acceptance: all criteria passed\n" : "acceptance: FAILURES above\n");
  return ok ? 0 : 1;
}
