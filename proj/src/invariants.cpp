#include "singlift/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "singlift/lp.hpp"
#include "singlift/parallel.hpp"
#include "singlift/rng.hpp"
#include "singlift/toric.hpp"

namespace singlift {

namespace {

Int val_raw(const std::vector<Int>& w, const MonomialIdeal& a) {
  Int best = 0;
  bool first = true;
  for (const auto& u : a.generators()) {
    Int v = 0;
    for (std::size_t j = 0; j < w.size(); ++j) v += w[j] * u[j];
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

Rational log_discrepancy_raw(const std::vector<Int>& w, const MultiIdeal& A) {
  Rational a(0);
  for (Int x : w) a += Rational(x);
  for (const auto& f : A.factors()) a -= f.exponent * Rational(val_raw(w, f.ideal));
  return a;
}

}  // namespace

ContactResult contact_codim(const MultiIdeal& A, const JetOrderVec& m, bool origin_fiber) {
  if (m.size() != A.factor_count())
    throw std::invalid_argument("contact_codim: jet order count != factor count");
  for (Int mi : m)
    if (mi < 0) throw std::invalid_argument("contact_codim: negative jet order");
  const Int N = A.dim();

  // Rows <w,u> >= need, one per generator of each factor with m_i > 0.
  std::vector<std::pair<ExponentVec, Int>> rows;
  Int M = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    M = std::max(M, m[i]);
    if (m[i] == 0) continue;
    for (const auto& u : A.factor(i).ideal.generators()) rows.emplace_back(u, m[i]);
  }
  const Int lo = origin_fiber ? 1 : 0;
  if (rows.empty()) {
    if (!origin_fiber) return {0, std::vector<Int>(N, 0)};
    return {N, std::vector<Int>(N, 1)};
  }

  // suffix_max[r][j] = max entry of row r at coordinates >= j.
  std::vector<std::vector<Int>> suffix_max(rows.size(), std::vector<Int>(N + 1, 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (Int j = N - 1; j >= 0; --j)
      suffix_max[r][j] = std::max(suffix_max[r][j + 1], rows[r].first[j]);

  // M*(1,...,1) is feasible (every generator has total degree >= 1), so the
  // optimum is at most N*M and the graded scan below terminates.
  const Int t_max = N * M;
  std::vector<Int> w(N, 0);
  std::vector<Int> dots(rows.size(), 0);
  std::vector<Int> found;

  auto dfs = [&](auto&& self, Int j, Int rem) -> bool {
    if (j == N - 1) {
      if (rem < lo) return false;
      w[j] = rem;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (dots[r] + rows[r].first[j] * rem < rows[r].second) return false;
      found = w;
      return true;
    }
    for (Int x = lo; x <= rem - lo * (N - 1 - j); ++x) {
      bool ok = true;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        Int have = dots[r] + rows[r].first[j] * x;
        if (have + (rem - x) * suffix_max[r][j + 1] < rows[r].second) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      w[j] = x;
      for (std::size_t r = 0; r < rows.size(); ++r) dots[r] += rows[r].first[j] * x;
      if (self(self, j + 1, rem - x)) return true;
      for (std::size_t r = 0; r < rows.size(); ++r) dots[r] -= rows[r].first[j] * x;
    }
    return false;
  };

  for (Int T = std::max<Int>(lo * N, 1); T <= t_max; ++T) {
    std::fill(dots.begin(), dots.end(), 0);
    if (dfs(dfs, 0, T)) return {T, found};
  }
  throw std::logic_error("contact_codim: feasible-point bound violated");
}

Rational s_m(const MultiIdeal& A, const JetOrderVec& m) {
  Rational value(contact_codim(A, m, true).codim);
  for (std::size_t i = 0; i < m.size(); ++i)
    value -= A.factor(i).exponent * Rational(m[i]);
  return value;
}

Rational z_m(const MonomialIdeal& a, Int m) {
  if (m < 0) throw std::invalid_argument("z_m: negative jet order");
  MultiIdeal A({{a, Rational(1)}});
  Int codim = contact_codim(A, {m + 1}, false).codim;
  return Rational(codim, m + 1);
}

namespace {

// Iterates over all selections of one generator index per factor, lex order.
struct SelectionOdometer {
  std::vector<std::size_t> sel;
  std::vector<std::size_t> sizes;
  bool done = false;
  explicit SelectionOdometer(const MultiIdeal& A) {
    for (const auto& f : A.factors()) sizes.push_back(f.ideal.generator_count());
    sel.assign(sizes.size(), 0);
  }
  void advance() {
    for (std::size_t i = sel.size(); i-- > 0;) {
      if (++sel[i] < sizes[i]) return;
      sel[i] = 0;
    }
    done = true;
  }
};

std::vector<Int> scale_to_primitive_int(const std::vector<Rational>& r) {
  mpz_class L(1);
  for (const auto& x : r) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> scaled(r.size());
  mpz_class g(0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    scaled[i] = r[i].numerator() * (L / r[i].denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
  }
  if (g == 0) throw std::logic_error("scale_to_primitive_int: zero vector");
  std::vector<Int> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpz_class v = scaled[i] / g;
    if (!v.fits_slong_p()) throw std::logic_error("scale_to_primitive_int: entry overflow");
    out[i] = v.get_si();
  }
  return out;
}

}  // namespace

InvariantResult mld_toric(const MultiIdeal& A, std::optional<Int> box_override, int threads) {
  const Int N = A.dim();
  const auto& factors = A.factors();

  mpz_class denom_lcm(1);
  for (const auto& f : factors)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
            f.exponent.denominator().get_mpz_t());

  std::optional<Rational> global_lower;
  for (SelectionOdometer od(A); !od.done; od.advance()) {
    // Objective <w, v> with v = 1 - sum_i e_i * u_sel(i), valid on the region
    // where each selected generator attains its factor's valuation.
    std::vector<Rational> v(N, Rational(1));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& u = factors[i].ideal.generators()[od.sel[i]];
      for (Int j = 0; j < N; ++j) v[j] -= factors[i].exponent * Rational(u[j]);
    }
    std::vector<std::vector<Rational>> region_rows;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& gens = factors[i].ideal.generators();
      const auto& usel = gens[od.sel[i]];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (g == od.sel[i]) continue;
        std::vector<Rational> row(N);
        for (Int j = 0; j < N; ++j) row[j] = Rational(gens[g][j] - usel[j]);
        region_rows.push_back(std::move(row));
      }
    }

    // Ray analysis: minimize <r,v> over the region's rays, normalized to the
    // simplex. A negative value certifies mld = -infinity by homogeneity.
    LpProblem ray;
    ray.c = v;
    ray.lower.assign(N, Rational(0));
    ray.A = region_rows;
    ray.b.assign(region_rows.size(), Rational(0));
    ray.A.push_back(std::vector<Rational>(N, Rational(1)));
    ray.b.push_back(Rational(1));
    ray.A.push_back(std::vector<Rational>(N, Rational(-1)));
    ray.b.push_back(Rational(-1));
    LpResult ray_res = solve_lp_min(ray);
    if (ray_res.status == LpResult::Status::Infeasible) continue;  // region is {0}
    if (ray_res.status != LpResult::Status::Optimal)
      throw std::logic_error("mld_toric: ray program cannot be unbounded");

    if (ray_res.objective.sign() < 0) {
      std::vector<Int> r = scale_to_primitive_int(ray_res.point);
      Rational a_r(0);
      for (Int j = 0; j < N; ++j) a_r += v[j] * Rational(r[j]);
      std::vector<Int> ones(N, 1);
      Rational a_1 = log_discrepancy_raw(ones, A);
      // a(1 + M*r) <= a_1 + M*a_r by superadditivity of val, so scanning M up
      // to the first bound-violating value finds the least integer witness on
      // this ray.
      mpz_class m_cap = (a_1 / (-a_r)).floor() + 1;
      if (m_cap < 0) m_cap = 0;
      for (mpz_class M = 0; M <= m_cap; ++M) {
        std::vector<Int> w(N);
        for (Int j = 0; j < N; ++j) w[j] = 1 + static_cast<Int>(M.get_si()) * r[j];
        if (log_discrepancy_raw(w, A).sign() < 0) {
          InvariantResult res;
          res.value = ExtRational::minus_infinity();
          res.weight_witness = WeightVector(w);
          res.certificate = Certificate::Certified;
          res.route = "toric-region-ray";
          return res;
        }
      }
      throw std::logic_error("mld_toric: negative-ray witness scan failed");
    }

    // Exact rational minimum over region & {w >= 1}: a lower bound for every
    // integer w >= 1 whose argmin selection is this one.
    LpProblem reg;
    reg.c = v;
    reg.lower.assign(N, Rational(1));
    reg.A = region_rows;
    reg.b.assign(region_rows.size(), Rational(0));
    LpResult reg_res = solve_lp_min(reg);
    if (reg_res.status == LpResult::Status::Infeasible) continue;
    if (reg_res.status != LpResult::Status::Optimal)
      throw std::logic_error("mld_toric: bounded region program reported unbounded");
    if (!global_lower || reg_res.objective < *global_lower) global_lower = reg_res.objective;
  }
  if (!global_lower) throw std::logic_error("mld_toric: no region admitted w >= 1");

  // Values a(w) lie on the lattice (1/q)Z, q = lcm of exponent denominators;
  // round the real lower bound up to the lattice before comparing.
  Rational lower_rounded =
      Rational((*global_lower * Rational(denom_lcm)).ceil()) / Rational(denom_lcm);

  Int box;
  if (box_override) {
    if (*box_override < 1) throw std::invalid_argument("mld_toric: box bound must be >= 1");
    box = *box_override;
  } else {
    Rational weighted(0);
    for (const auto& f : factors)
      weighted += f.exponent * Rational(f.ideal.max_generator_degree());
    mpz_class c = weighted.ceil();
    box = N * (1 + static_cast<Int>(c.get_si()));
  }

  struct Best {
    bool has = false;
    Rational value;
    std::vector<Int> witness;
  };
  auto sweep_first_coord = [&](std::size_t job) {
    Best best;
    std::vector<Int> w(N, 1);
    w[0] = static_cast<Int>(job) + 1;
    auto rec = [&](auto&& self, Int j) -> void {
      if (j == N) {
        Rational val = log_discrepancy_raw(w, A);
        if (!best.has || val < best.value) {
          best.has = true;
          best.value = val;
          best.witness = w;
        }
        return;
      }
      for (Int x = 1; x <= box; ++x) {
        w[j] = x;
        self(self, j + 1);
      }
    };
    rec(rec, 1);
    return best;
  };
  std::vector<Best> per_first =
      parallel_map_indexed<Best>(static_cast<std::size_t>(box), threads, sweep_first_coord);
  Best best;
  for (const auto& b : per_first) {
    if (!b.has) continue;
    if (!best.has || b.value < best.value ||
        (b.value == best.value && b.witness < best.witness)) {
      best = b;
    }
  }
  if (!best.has) throw std::logic_error("mld_toric: empty box sweep");
  if (best.value.sign() < 0)
    throw std::logic_error("mld_toric: negative box value escaped ray analysis");

  InvariantResult res;
  res.value = ExtRational(best.value);
  res.weight_witness = WeightVector(best.witness);
  res.box = box;
  res.lower_bound = lower_rounded;
  res.certificate =
      (best.value == lower_rounded) ? Certificate::Certified : Certificate::BoxBounded;
  res.route = "toric-region-box";
  return res;
}

namespace {

std::vector<JetOrderVec> enumerate_orders(std::size_t s, Int bound) {
  std::vector<JetOrderVec> out;
  JetOrderVec m(s, 0);
  auto rec = [&](auto&& self, std::size_t i, Int rest) -> void {
    if (i == s - 1) {
      for (Int x = 0; x <= rest; ++x) {
        m[i] = x;
        out.push_back(m);
      }
      return;
    }
    for (Int x = 0; x <= rest; ++x) {
      m[i] = x;
      self(self, i + 1, rest - x);
    }
  };
  rec(rec, 0, bound);
  return out;
}

}  // namespace

InvariantResult mld_via_jets(const MultiIdeal& A, Int search_bound, int threads,
                             const InvariantResult* toric_hint) {
  if (search_bound < 1) throw std::invalid_argument("mld_via_jets: search bound must be >= 1");
  std::vector<JetOrderVec> orders = enumerate_orders(A.factor_count(), search_bound);
  std::vector<Rational> values = parallel_map_indexed<Rational>(
      orders.size(), threads, [&](std::size_t i) { return s_m(A, orders[i]); });
  std::size_t argmin = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[argmin]) argmin = i;  // first hit is lex-min

  InvariantResult res;
  res.jet_witness = orders[argmin];
  res.box = search_bound;
  res.route = "jet-sweep";
  res.value = values[argmin].sign() < 0 ? ExtRational::minus_infinity()
                                        : ExtRational(values[argmin]);

  InvariantResult toric_local;
  const InvariantResult* toric = toric_hint;
  if (!toric) {
    toric_local = mld_toric(A, {}, threads);
    toric = &toric_local;
  }
  res.certificate = (toric->certificate == Certificate::Certified && toric->value == res.value)
                        ? Certificate::Certified
                        : Certificate::BoxBounded;
  return res;
}

InvariantResult lct_via_jets(const MonomialIdeal& a, Int search_bound) {
  if (search_bound < 1) throw std::invalid_argument("lct_via_jets: search bound must be >= 1");
  InvariantResult res;
  Rational best;
  Int best_m = -1;
  for (Int m = 0; m <= search_bound; ++m) {
    Rational v = z_m(a, m);
    if (best_m < 0 || v < best) {
      best = v;
      best_m = m;
    }
  }
  res.value = ExtRational(best);
  res.jet_witness = JetOrderVec{best_m};
  res.box = search_bound;
  res.route = "jet-sweep";
  res.certificate = (best == lct_howald(a)) ? Certificate::Certified : Certificate::BoxBounded;
  return res;
}

MdResult md_lct_toric(const MonomialIdeal& a, Int k_cap) {
  if (k_cap < 1) throw std::invalid_argument("md_lct_toric: cap must be >= 1");
  Rational lct = lct_howald(a);
  const Int N = a.dim();
  MdResult out;
  std::vector<Int> w(N, 0);
  // All w >= 0 with 1 <= <w,1> <= k_cap + 1, in lex order.
  auto rec = [&](auto&& self, Int j, Int rest) -> void {
    if (j == N - 1) {
      for (Int x = 0; x <= rest; ++x) {
        w[j] = x;
        if (is_zero(w)) continue;
        WeightVector wv(w);
        auto ratio = lct_ratio(wv, a);
        if (ratio && *ratio == lct) out.computing.push_back(wv);
        w[j] = 0;
      }
      return;
    }
    for (Int x = 0; x <= rest; ++x) {
      w[j] = x;
      self(self, j + 1, rest - x);
    }
    w[j] = 0;
  };
  rec(rec, 0, k_cap + 1);
  // Enumeration above fixes <w,1> only implicitly; recover k and minimize.
  for (const auto& wv : out.computing) {
    Int k = discrepancy(wv);
    if (!out.found || k < out.k_min) {
      out.found = true;
      out.k_min = k;
    }
  }
  if (out.found)
    for (const auto& wv : out.computing)
      if (discrepancy(wv) == out.k_min) out.witnesses.push_back(wv);
  return out;
}

Int height_monomial(const MonomialIdeal& a) {
  const Int N = a.dim();
  const auto& gens = a.generators();
  std::vector<Int> subset;
  auto covers = [&]() {
    for (const auto& u : gens) {
      bool hit = false;
      for (Int j : subset)
        if (u[j] > 0) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };
  for (Int size = 1; size <= N; ++size) {
    bool ok = false;
    auto rec = [&](auto&& self, Int start) -> void {
      if (ok) return;
      if (static_cast<Int>(subset.size()) == size) {
        if (covers()) ok = true;
        return;
      }
      for (Int j = start; j < N && !ok; ++j) {
        subset.push_back(j);
        self(self, j + 1);
        subset.pop_back();
      }
    };
    rec(rec, 0);
    if (ok) return size;
  }
  throw std::logic_error("height_monomial: full variable set fails to cover");
}

namespace {

void check_exponents(const std::vector<Rational>& e, const char* who) {
  if (e.empty()) throw std::invalid_argument(std::string(who) + ": empty exponent list");
  for (const auto& x : e)
    if (x.sign() <= 0) throw std::invalid_argument(std::string(who) + ": exponents must be > 0");
}

}  // namespace

Rational bound_divisor_to_jet(Int ell, const std::vector<Rational>& e) {
  if (ell < 0) throw std::invalid_argument("bound_divisor_to_jet: negative discrepancy bound");
  check_exponents(e, "bound_divisor_to_jet");
  Rational mx = e.front(), mn = e.front();
  for (const auto& x : e) {
    if (x > mx) mx = x;
    if (x < mn) mn = x;
  }
  return (Rational(ell) + Rational(1) + mx) / mn;
}

Rational bound_jet_to_divisor(const Rational& ell_prime, Int N, const std::vector<Rational>& e) {
  if (ell_prime.sign() < 0)
    throw std::invalid_argument("bound_jet_to_divisor: negative jet bound");
  if (N < 1) throw std::invalid_argument("bound_jet_to_divisor: dimension must be >= 1");
  check_exponents(e, "bound_jet_to_divisor");
  Rational mx = e.front();
  for (const auto& x : e)
    if (x > mx) mx = x;
  return Rational(N - 1) + ell_prime * mx;
}

Int bound_lct_translation(Int L_prime, Int N) {
  if (L_prime < 1) throw std::invalid_argument("bound_lct_translation: L' must be >= 1");
  if (N < 1) throw std::invalid_argument("bound_lct_translation: dimension must be >= 1");
  return (L_prime + 1) * N - 1;
}

namespace {

std::vector<ExponentVec> monomials_of_degree_below(Int N, Int mu) {
  // All exponent vectors with 1 <= total degree <= mu-1, lex sorted.
  std::vector<ExponentVec> out;
  ExponentVec u(N, 0);
  auto rec = [&](auto&& self, Int j, Int rest) -> void {
    if (j == N) {
      if (!is_zero(u)) out.push_back(u);
      return;
    }
    for (Int x = 0; x <= rest; ++x) {
      u[j] = x;
      self(self, j + 1, rest - x);
    }
    u[j] = 0;
  };
  rec(rec, 0, mu - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ScanReport scan_md_bound(Int N, Int mu, Int k_cap, std::optional<std::uint64_t> seed,
                         Int samples, int threads) {
  if (N < 1 || mu < 1) throw std::invalid_argument("scan_md_bound: N and mu must be >= 1");
  if (k_cap < 1) throw std::invalid_argument("scan_md_bound: cap must be >= 1");
  ScanReport rep;
  rep.N = N;
  rep.mu = mu;
  rep.cap = k_cap;
  rep.exhaustive = (N <= 3 && mu <= 4);
  if (!rep.exhaustive) {
    if (!seed) throw std::invalid_argument("scan_md_bound: sampled mode requires a seed");
    if (samples < 1) throw std::invalid_argument("scan_md_bound: sample count must be >= 1");
    rep.seed = *seed;
    rep.samples = samples;
  }

  std::vector<ExponentVec> below = monomials_of_degree_below(N, mu);
  const std::size_t n_below = below.size();
  // Ideals between m^mu and m correspond to divisibility-up-closed subsets of
  // the monomials of degree 1..mu-1.
  std::vector<std::uint64_t> closure(n_below, 0);
  for (std::size_t i = 0; i < n_below; ++i)
    for (std::size_t j = 0; j < n_below; ++j)
      if (divides(below[i], below[j])) closure[i] |= (1ull << j);

  std::vector<std::uint64_t> masks;
  if (rep.exhaustive) {
    for (std::uint64_t mask = 0; mask < (1ull << n_below); ++mask) {
      bool up_closed = true;
      for (std::size_t i = 0; i < n_below && up_closed; ++i)
        if ((mask >> i) & 1) up_closed = (mask & closure[i]) == closure[i];
      if (up_closed) masks.push_back(mask);
    }
  } else {
    SplitMix64 rng(rep.seed);
    std::set<std::uint64_t> seen;
    for (Int t = 0; t < samples; ++t) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < n_below; ++i)
        if (rng.next() & 1) mask |= closure[i];  // pick then close upward
      seen.insert(mask);
    }
    masks.assign(seen.begin(), seen.end());
  }

  std::vector<MonomialIdeal> ideals;
  ideals.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    std::vector<ExponentVec> gens = power_of_maximal_ideal(N, mu).generators();
    for (std::size_t i = 0; i < n_below; ++i)
      if ((mask >> i) & 1) gens.push_back(below[i]);
    ideals.emplace_back(N, std::move(gens));
  }

  rep.entries = parallel_map_indexed<ScanEntry>(ideals.size(), threads, [&](std::size_t i) {
    ScanEntry e{ideals[i], lct_howald(ideals[i]), std::nullopt};
    MdResult md = md_lct_toric(ideals[i], k_cap);
    if (md.found) e.md = md.k_min;
    return e;
  });
  for (const auto& e : rep.entries) {
    if (!e.md) {
      rep.unresolved.push_back(e.ideal);
      continue;
    }
    if (!rep.max_md || *e.md > *rep.max_md) {
      rep.max_md = *e.md;
      rep.argmax.clear();
    }
    if (*e.md == *rep.max_md) rep.argmax.push_back(e.ideal);
  }
  return rep;
}

namespace {

std::string scan_mode(const ScanReport& r) {
  if (r.exhaustive) return "exhaustive";
  std::ostringstream os;
  os << "sampled seed=" << r.seed << " samples=" << r.samples;
  return os.str();
}

}  // namespace

std::string ScanReport::to_text() const {
  std::ostringstream os;
  os << "scan N=" << N << " mu=" << mu << " cap=" << cap << " mode=" << scan_mode(*this)
     << " ideals=" << entries.size() << "\n";
  for (const auto& e : entries) {
    os << "  " << e.ideal.str() << "  lct " << e.lct.str() << "  md ";
    if (e.md)
      os << *e.md;
    else
      os << "unresolved(cap=" << cap << ")";
    os << "\n";
  }
  os << "max-md ";
  if (max_md) {
    os << *max_md << "  argmax";
    for (const auto& a : argmax) os << ' ' << a.str();
  } else {
    os << "none";
  }
  os << "\n";
  os << "unresolved " << unresolved.size() << "\n";
  return os.str();
}

std::string ScanReport::to_tsv() const {
  std::ostringstream os;
  os << "scan\t" << N << '\t' << mu << '\t' << cap << '\t' << scan_mode(*this) << '\t'
     << entries.size() << "\n";
  for (const auto& e : entries) {
    os << "case\t" << e.ideal.str() << '\t' << e.lct.str() << '\t';
    if (e.md)
      os << *e.md;
    else
      os << "Unresolved";
    os << "\n";
  }
  os << "max\t";
  if (max_md) {
    os << *max_md << '\t';
    for (std::size_t i = 0; i < argmax.size(); ++i) {
      if (i) os << ';';
      os << argmax[i].str();
    }
  } else {
    os << "none\t";
  }
  os << "\n";
  os << "unresolved\t" << unresolved.size() << "\n";
  return os.str();
}

}  // namespace singlift
