#include "singlift/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace singlift {

MonomialIdeal::MonomialIdeal(Int dim, std::vector<ExponentVec> generators) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("MonomialIdeal: dimension must be >= 1");
  if (generators.empty()) throw std::invalid_argument("MonomialIdeal: empty generator list");
  for (const auto& u : generators) {
    if (static_cast<Int>(u.size()) != dim)
      throw std::invalid_argument("MonomialIdeal: generator dimension mismatch");
    for (Int e : u)
      if (e < 0) throw std::invalid_argument("MonomialIdeal: negative exponent");
    if (is_zero(u))
      throw std::invalid_argument("MonomialIdeal: zero exponent vector (unit ideal)");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& u : generators) {
    bool dominated = false;
    for (const auto& v : generators) {
      if (v != u && divides(v, u)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) gens_.push_back(u);
  }
}

bool MonomialIdeal::contains_monomial(const ExponentVec& u) const {
  if (static_cast<Int>(u.size()) != dim_)
    throw std::invalid_argument("MonomialIdeal: monomial dimension mismatch");
  for (const auto& g : gens_)
    if (divides(g, u)) return true;
  return false;
}

Int MonomialIdeal::max_generator_degree() const {
  Int d = 0;
  for (const auto& g : gens_) d = std::max(d, total_degree(g));
  return d;
}

std::vector<SparsePolynomial> MonomialIdeal::generator_polynomials(Ring ring) const {
  std::vector<SparsePolynomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(SparsePolynomial::monomial(ring, g));
  return out;
}

std::string MonomialIdeal::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << SparsePolynomial::monomial(Ring::integers(), gens_[i]).str();
  }
  os << ')';
  return os.str();
}

MonomialIdeal minimalize(Int dim, const std::vector<ExponentVec>& generators) {
  return MonomialIdeal(dim, generators);
}

bool contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& g : b.generators())
    if (!a.contains_monomial(g)) return false;
  return true;
}

MonomialIdeal power_of_maximal_ideal(Int N, Int mu) {
  if (N < 1) throw std::invalid_argument("power_of_maximal_ideal: N must be >= 1");
  if (mu < 1) throw std::invalid_argument("power_of_maximal_ideal: exponent must be >= 1");
  std::vector<ExponentVec> gens;
  ExponentVec u(N, 0);
  // Enumerate all u >= 0 with |u| = mu.
  auto rec = [&](auto&& self, Int pos, Int rest) -> void {
    if (pos == N - 1) {
      u[pos] = rest;
      gens.push_back(u);
      return;
    }
    for (Int k = 0; k <= rest; ++k) {
      u[pos] = k;
      self(self, pos + 1, rest - k);
    }
  };
  rec(rec, 0, mu);
  return MonomialIdeal(N, gens);
}

MultiIdeal::MultiIdeal(std::vector<MultiIdealFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("MultiIdeal: needs at least one factor");
  dim_ = factors_.front().ideal.dim();
  for (const auto& f : factors_) {
    if (f.ideal.dim() != dim_)
      throw std::invalid_argument("MultiIdeal: factors have mismatched dimensions");
    if (f.exponent.sign() <= 0)
      throw std::invalid_argument("MultiIdeal: factor exponents must be positive");
  }
}

std::string MultiIdeal::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " * ";
    os << factors_[i].ideal.str() << '^' << factors_[i].exponent.str();
  }
  return os.str();
}

}  // namespace singlift
