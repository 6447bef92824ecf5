#include "singlift/polyhedra.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "singlift/lp.hpp"

namespace singlift {

std::optional<Int> val_w_polynomial(const WeightVector& w, const SparsePolynomial& f) {
  if (w.dim() != f.dim()) throw std::invalid_argument("val_w_polynomial: dimension mismatch");
  std::optional<Int> best;
  for (const auto& [u, c] : f.terms()) {
    Int v = dot(w.entries(), u);
    if (!best || v < *best) best = v;
  }
  return best;
}

Int val_w_ideal(const WeightVector& w, const MonomialIdeal& a) {
  if (w.dim() != a.dim()) throw std::invalid_argument("val_w_ideal: dimension mismatch");
  Int best = 0;
  bool first = true;
  for (const auto& u : a.generators()) {
    Int v = dot(w.entries(), u);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

namespace {

using I128 = __int128;

// Determinant of a small integer matrix, fraction-free (Bareiss). Entries and
// all intermediates are minors of the input, so int64 storage suffices at the
// scales handled here; products are taken in 128 bits.
Int det_bareiss(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  Int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        I128 num = static_cast<I128>(m[i][j]) * m[k][k] -
                   static_cast<I128>(m[i][k]) * m[k][j];
        m[i][j] = static_cast<Int>(num / prev);
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Kernel direction of a (d-1) x d matrix of rank d-1, as signed maximal
// minors; the zero vector signals lower rank.
std::vector<Int> kernel_direction(const std::vector<std::vector<Int>>& rows, int d) {
  std::vector<Int> r(d, 0);
  std::vector<std::vector<Int>> sub(rows.size(), std::vector<Int>(d - 1));
  for (int drop = 0; drop < d; ++drop) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int c = 0;
      for (int j = 0; j < d; ++j)
        if (j != drop) sub[i][c++] = rows[i][j];
    }
    Int minor = det_bareiss(sub);
    r[drop] = (drop % 2 == 0) ? minor : -minor;
  }
  return r;
}

Int vec_gcd(const std::vector<Int>& v, int lo, int hi) {
  Int g = 0;
  for (int i = lo; i < hi; ++i) g = std::gcd(g, std::abs(v[i]));
  return g;
}

// Extreme rays of the pointed cone {x : A x >= 0} by rank-(d-1) subsets.
std::vector<std::vector<Int>> cone_extreme_rays(const std::vector<std::vector<Int>>& A, int d) {
  const int n = static_cast<int>(A.size());
  std::set<std::vector<Int>> rays;
  std::vector<int> idx(d - 1);
  std::vector<std::vector<Int>> sel(d - 1);
  auto feasible = [&](const std::vector<Int>& r) {
    for (const auto& row : A) {
      I128 s = 0;
      for (int j = 0; j < d; ++j) s += static_cast<I128>(row[j]) * r[j];
      if (s < 0) return false;
    }
    return true;
  };
  auto consider = [&]() {
    for (int i = 0; i < d - 1; ++i) sel[i] = A[idx[i]];
    std::vector<Int> r = kernel_direction(sel, d);
    Int g = vec_gcd(r, 0, d);
    if (g == 0) return;  // rank < d-1
    for (Int& x : r) x /= g;
    if (feasible(r)) {
      rays.insert(r);
    } else {
      for (Int& x : r) x = -x;
      if (feasible(r)) rays.insert(r);
    }
  };
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == d - 1) {
      consider();
      return;
    }
    for (int i = start; i <= n - (d - 1 - pos); ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  if (n >= d - 1) rec(rec, 0, 0);
  return {rays.begin(), rays.end()};
}

std::vector<Facet> enumerate_facets(const MonomialIdeal& a) {
  const int N = static_cast<int>(a.dim());
  const int d = N + 1;
  // Dual cone of the homogenized polyhedron: (w, c') with w_j >= 0 and
  // <w, u_g> + c' >= 0; extreme rays with w != 0 are the facets of Newt(a),
  // with offset -c'. Offset 0 rays are orthant bounds and are dropped.
  std::vector<std::vector<Int>> A;
  for (int j = 0; j < N; ++j) {
    std::vector<Int> row(d, 0);
    row[j] = 1;
    A.push_back(std::move(row));
  }
  for (const auto& u : a.generators()) {
    std::vector<Int> row(u.begin(), u.end());
    row.push_back(1);
    A.push_back(std::move(row));
  }
  std::vector<Facet> facets;
  for (auto& ray : cone_extreme_rays(A, d)) {
    Int g = vec_gcd(ray, 0, N);
    if (g == 0) continue;  // the trivial (0,...,0,1) ray
    // val_{g*w'} = g*val_{w'} forces g | c', so this stays integral.
    if (ray[N] % g != 0) throw std::logic_error("enumerate_facets: non-integral offset");
    Facet f;
    f.normal.assign(ray.begin(), ray.begin() + N);
    for (Int& x : f.normal) x /= g;
    f.offset = -ray[N] / g;
    if (f.offset > 0) facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& x, const Facet& y) { return x.normal < y.normal; });
  return facets;
}

}  // namespace

struct NewtonPolyhedron::Cache {
  std::once_flag once;
  std::vector<Facet> facets;
};

NewtonPolyhedron::NewtonPolyhedron(MonomialIdeal a)
    : ideal_(std::move(a)), cache_(std::make_shared<Cache>()) {}

const std::vector<Facet>& NewtonPolyhedron::facets() const {
  std::call_once(cache_->once, [&] { cache_->facets = enumerate_facets(ideal_); });
  return cache_->facets;
}

bool NewtonPolyhedron::contains(const std::vector<Rational>& q) const {
  if (static_cast<Int>(q.size()) != dim())
    throw std::invalid_argument("NewtonPolyhedron: point dimension mismatch");
  for (const auto& x : q)
    if (x.sign() < 0) return false;
  for (const auto& f : facets()) {
    Rational s(0);
    for (std::size_t j = 0; j < q.size(); ++j) s += Rational(f.normal[j]) * q[j];
    if (s < Rational(f.offset)) return false;
  }
  return true;
}

bool newton_contains_lp(const MonomialIdeal& a, const std::vector<Rational>& q) {
  if (static_cast<Int>(q.size()) != a.dim())
    throw std::invalid_argument("newton_contains_lp: point dimension mismatch");
  const auto& gens = a.generators();
  const int G = static_cast<int>(gens.size());
  const int N = static_cast<int>(a.dim());
  LpProblem p;
  p.c.assign(G, Rational(0));
  p.lower.assign(G, Rational(0));
  for (int j = 0; j < N; ++j) {
    std::vector<Rational> row(G);
    for (int g = 0; g < G; ++g) row[g] = Rational(-gens[g][j]);
    p.A.push_back(std::move(row));
    p.b.push_back(-q[j]);
  }
  p.A.push_back(std::vector<Rational>(G, Rational(1)));
  p.b.push_back(Rational(1));
  p.A.push_back(std::vector<Rational>(G, Rational(-1)));
  p.b.push_back(Rational(-1));
  return solve_lp_min(p).status == LpResult::Status::Optimal;
}

Rational lct_newton_lp(const MonomialIdeal& a) {
  // lambda* = min{lambda : lambda*(1,..,1) in Newt(a)}; lct = 1/lambda*.
  const auto& gens = a.generators();
  const int G = static_cast<int>(gens.size());
  const int N = static_cast<int>(a.dim());
  LpProblem p;  // variables (lambda, mu_1..mu_G)
  p.c.assign(G + 1, Rational(0));
  p.c[0] = Rational(1);
  p.lower.assign(G + 1, Rational(0));
  for (int j = 0; j < N; ++j) {
    std::vector<Rational> row(G + 1, Rational(0));
    row[0] = Rational(1);
    for (int g = 0; g < G; ++g) row[g + 1] = Rational(-gens[g][j]);
    p.A.push_back(std::move(row));
    p.b.push_back(Rational(0));
  }
  std::vector<Rational> ones(G + 1, Rational(1));
  ones[0] = Rational(0);
  p.A.push_back(ones);
  p.b.push_back(Rational(1));
  for (auto& x : ones) x = -x;
  p.A.push_back(ones);
  p.b.push_back(Rational(-1));
  LpResult r = solve_lp_min(p);
  if (r.status != LpResult::Status::Optimal || r.objective.sign() <= 0)
    throw std::logic_error("lct_newton_lp: membership program degenerate");
  return Rational(1) / r.objective;
}

LctResult lct_howald_detailed(const NewtonPolyhedron& P) {
  const auto& fs = P.facets();
  if (fs.empty()) throw std::logic_error("lct_howald: no essential facets");
  LctResult out;
  bool first = true;
  for (const auto& f : fs) {
    Rational ratio(total_degree(f.normal), f.offset);
    if (first || ratio < out.value) {
      out.value = ratio;
      out.attaining.clear();
    }
    if (ratio == out.value) out.attaining.push_back(f);
    first = false;
  }
  Rational check = lct_newton_lp(P.ideal());
  if (check != out.value)
    throw std::logic_error("lct_howald: facet route and membership route disagree");
  return out;
}

Rational lct_howald(const MonomialIdeal& a) {
  return lct_howald_detailed(NewtonPolyhedron(a)).value;
}

}  // namespace singlift
