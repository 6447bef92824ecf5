#include "singlift/jets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "singlift/lifting.hpp"

namespace singlift {

std::string JetVariable::str() const {
  std::ostringstream os;
  os << "X_" << base_index << '_' << order;
  return os.str();
}

bool jet_monomial_less(const JetMonomial& a, const JetMonomial& b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) {
      // Equal up to here; the side with fewer copies either ends (proper
      // prefix, smaller) or continues with a strictly larger variable while
      // the other side still repeats the current one.
      if (ia->second < ib->second) return std::next(ia) == a.end();
      return std::next(ib) != b.end();
    }
    ++ia;
    ++ib;
  }
  return ia == a.end() && ib != b.end();
}

JetPolynomial::JetPolynomial(Ring ring, Int dim) : ring_(ring), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("JetPolynomial: dimension must be >= 1");
}

JetPolynomial JetPolynomial::constant(Ring ring, Int dim, const Rational& c) {
  JetPolynomial f(ring, dim);
  f.add_term({}, c);
  return f;
}

JetPolynomial JetPolynomial::variable(Ring ring, Int dim, Int base_index, Int order) {
  if (base_index < 1 || base_index > dim)
    throw std::invalid_argument("JetPolynomial: base index out of range");
  if (order < 0) throw std::invalid_argument("JetPolynomial: negative order");
  JetPolynomial f(ring, dim);
  f.add_term({{JetVariable{base_index, order}, 1}}, Rational(1));
  return f;
}

Int JetPolynomial::max_order() const {
  Int q = -1;
  for (const auto& [mono, c] : terms_)
    for (const auto& [var, e] : mono) q = std::max(q, var.order);
  return q;
}

void JetPolynomial::add_term(const JetMonomial& mono, const Rational& c) {
  for (const auto& [var, e] : mono) {
    if (var.base_index < 1 || var.base_index > dim_ || var.order < 0 || e < 1)
      throw std::invalid_argument("JetPolynomial: malformed monomial");
  }
  auto it = terms_.find(mono);
  Rational v = normalize_coefficient(ring_, it == terms_.end() ? c : it->second + c);
  if (v.sign() == 0) {
    if (it != terms_.end()) terms_.erase(it);
    return;
  }
  if (it == terms_.end())
    terms_.emplace(mono, v);
  else
    it->second = v;
}

JetPolynomial& JetPolynomial::operator+=(const JetPolynomial& o) {
  if (ring_ != o.ring_ || dim_ != o.dim_)
    throw std::invalid_argument("JetPolynomial: mixed rings or dimensions");
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b) {
  if (a.ring_ != b.ring_ || a.dim_ != b.dim_)
    throw std::invalid_argument("JetPolynomial: mixed rings or dimensions");
  JetPolynomial out(a.ring_, a.dim_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      JetMonomial m = ma;
      for (const auto& [var, e] : mb) m[var] += e;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Rational JetPolynomial::evaluate(const std::vector<std::vector<Rational>>& point) const {
  if (static_cast<Int>(point.size()) != dim_)
    throw std::invalid_argument("JetPolynomial::evaluate: wrong point dimension");
  Rational acc(0);
  for (const auto& [mono, c] : terms_) {
    Rational term = c;
    for (const auto& [var, e] : mono) {
      const auto& row = point[var.base_index - 1];
      Rational v = var.order < static_cast<Int>(row.size()) ? row[var.order] : Rational(0);
      for (Int k = 0; k < e; ++k) term *= v;
    }
    acc += term;
  }
  return normalize_coefficient(ring_, acc);
}

std::string JetPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (mono.empty() || c != Rational(1)) {
      os << c.str();
      if (!mono.empty()) os << '*';
    }
    bool started = false;
    for (const auto& [var, e] : mono) {
      if (started) os << '*';
      started = true;
      os << var.str();
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

std::vector<JetPolynomial> jet_equations(const SparsePolynomial& f, Int m) {
  if (f.is_zero()) throw std::invalid_argument("jet_equations: zero polynomial");
  if (m < 0) throw std::invalid_argument("jet_equations: negative order");
  const Ring ring = f.ring();
  const Int N = f.dim();

  using Series = std::vector<JetPolynomial>;  // coefficient of t^q at index q
  auto zero_series = [&] { return Series(m + 1, JetPolynomial(ring, N)); };
  auto mul_trunc = [&](const Series& a, const Series& b) {
    Series out = zero_series();
    for (Int i = 0; i <= m; ++i) {
      if (a[i].is_zero()) continue;
      for (Int j = 0; i + j <= m; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  };

  std::vector<Series> coord(N, zero_series());
  for (Int l = 0; l < N; ++l)
    for (Int q = 0; q <= m; ++q) coord[l][q] = JetPolynomial::variable(ring, N, l + 1, q);

  Series total = zero_series();
  for (const auto& [u, c] : f.terms()) {
    Series term = zero_series();
    term[0] = JetPolynomial::constant(ring, N, c);
    for (Int l = 0; l < N; ++l)
      for (Int k = 0; k < u[l]; ++k) term = mul_trunc(term, coord[l]);
    for (Int q = 0; q <= m; ++q) total[q] += term[q];
  }
  return total;
}

JetSystem jet_system(const std::vector<std::vector<SparsePolynomial>>& factor_gens,
                     const std::vector<Int>& m) {
  if (factor_gens.empty()) throw std::invalid_argument("jet_system: no factors");
  if (factor_gens.size() != m.size())
    throw std::invalid_argument("jet_system: jet order count != factor count");
  const Ring ring = factor_gens.front().front().ring();
  const Int N = factor_gens.front().front().dim();
  for (std::size_t i = 0; i < factor_gens.size(); ++i) {
    if (m[i] < 0) throw std::invalid_argument("jet_system: negative jet order");
    if (factor_gens[i].empty()) throw std::invalid_argument("jet_system: factor with no generators");
    for (const auto& g : factor_gens[i]) {
      if (g.ring() != ring || g.dim() != N)
        throw std::invalid_argument("jet_system: mixed rings or dimensions");
      if (g.is_zero()) throw std::invalid_argument("jet_system: zero generator");
    }
  }

  JetSystem sys;
  sys.ring = ring;
  sys.dim = N;
  Int max_m = *std::max_element(m.begin(), m.end());
  sys.max_order = std::max<Int>(max_m - 1, 0);
  sys.fiber_only = (max_m == 0);
  for (std::size_t i = 0; i < factor_gens.size(); ++i) {
    if (m[i] == 0) continue;
    for (std::size_t g = 0; g < factor_gens[i].size(); ++g) {
      std::vector<JetPolynomial> eqs = jet_equations(factor_gens[i][g], m[i] - 1);
      for (Int q = 0; q < m[i]; ++q)
        sys.entries.push_back(
            {JetSystemEntry::Kind::Equation, i, g, q, eqs[static_cast<std::size_t>(q)]});
    }
  }
  for (Int l = 0; l < N; ++l)
    sys.entries.push_back({JetSystemEntry::Kind::Fiber, 0, static_cast<std::size_t>(l), 0,
                           JetPolynomial::variable(ring, N, l + 1, 0)});
  return sys;
}

JetPolynomial reduce_jet_polynomial_mod_p(const JetPolynomial& f, Int p) {
  if (f.ring().kind != Ring::Kind::Integers)
    throw std::invalid_argument("reduce_jet_polynomial_mod_p: integer coefficients required");
  JetPolynomial out(Ring::prime_field(p), f.dim());
  for (const auto& [mono, c] : f.terms()) out.add_term(mono, c);
  return out;
}

JetSystem reduce_jet_system_mod_p(const JetSystem& system, Int p) {
  if (system.ring.kind != Ring::Kind::Integers)
    throw std::invalid_argument("reduce_jet_system_mod_p: integer coefficients required");
  JetSystem out;
  out.ring = Ring::prime_field(p);
  out.dim = system.dim;
  out.max_order = system.max_order;
  out.fiber_only = system.fiber_only;
  for (const auto& e : system.entries)
    out.entries.push_back(
        {e.kind, e.factor, e.generator, e.order, reduce_jet_polynomial_mod_p(e.poly, p)});
  return out;
}

CommutationOutcome commutation_check(const SparsePolynomial& f, Int m, Int p) {
  SparsePolynomial reduced = reduce_mod_p(f, p);
  if (reduced.is_zero()) return CommutationOutcome::DegenerateLift;
  std::vector<JetPolynomial> over_z = jet_equations(f, m);
  std::vector<JetPolynomial> over_p = jet_equations(reduced, m);
  for (Int q = 0; q <= m; ++q)
    if (!(reduce_jet_polynomial_mod_p(over_z[static_cast<std::size_t>(q)], p) ==
          over_p[static_cast<std::size_t>(q)]))
      return CommutationOutcome::Mismatch;
  return CommutationOutcome::Match;
}

namespace {

std::string export_lines(const std::vector<const JetPolynomial*>& polys, Int dim,
                         Int max_order) {
  std::ostringstream os;
  os << "vars:";
  for (Int l = 1; l <= dim; ++l)
    for (Int q = 0; q <= max_order; ++q) os << ' ' << JetVariable{l, q}.str();
  os << '\n';
  for (std::size_t i = 0; i < polys.size(); ++i)
    os << "poly[" << i << "]: " << polys[i]->str() << '\n';
  return os.str();
}

}  // namespace

std::string export_cas(const JetSystem& system) {
  std::vector<const JetPolynomial*> ps;
  ps.reserve(system.entries.size());
  for (const auto& e : system.entries) ps.push_back(&e.poly);
  return export_lines(ps, system.dim, system.max_order);
}

std::string export_cas(const std::vector<JetPolynomial>& polys, Int dim, Int max_order) {
  std::vector<const JetPolynomial*> ps;
  ps.reserve(polys.size());
  for (const auto& p : polys) ps.push_back(&p);
  return export_lines(ps, dim, max_order);
}

}  // namespace singlift
