#pragma once

#include <map>
#include <string>
#include <vector>

#include "singlift/polynomial.hpp"
#include "singlift/rational.hpp"

namespace singlift {

// The q-th derivative slot of the ambient coordinate x_{base_index}.
struct JetVariable {
  Int base_index = 1;  // 1..N
  Int order = 0;       // q >= 0

  friend bool operator==(const JetVariable& a, const JetVariable& b) {
    return a.base_index == b.base_index && a.order == b.order;
  }
  friend bool operator<(const JetVariable& a, const JetVariable& b) {
    if (a.base_index != b.base_index) return a.base_index < b.base_index;
    return a.order < b.order;
  }
  std::string str() const;  // "X_1_0"
};

// Power product of jet variables, exponents >= 1.
using JetMonomial = std::map<JetVariable, Int>;

// Lexicographic comparison on the expanded variable sequence (each variable
// repeated by its exponent), the order the textual export uses.
bool jet_monomial_less(const JetMonomial& a, const JetMonomial& b);

struct JetMonomialLess {
  bool operator()(const JetMonomial& a, const JetMonomial& b) const {
    return jet_monomial_less(a, b);
  }
};

// Sparse polynomial in jet variables over a tagged coefficient ring. May be
// the zero polynomial: zero slots of a jet equation list are positional and
// must survive as explicit entries.
class JetPolynomial {
 public:
  JetPolynomial(Ring ring, Int dim);

  static JetPolynomial constant(Ring ring, Int dim, const Rational& c);
  static JetPolynomial variable(Ring ring, Int dim, Int base_index, Int order);

  Ring ring() const { return ring_; }
  Int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<JetMonomial, Rational, JetMonomialLess>& terms() const { return terms_; }
  Int max_order() const;  // largest order appearing, -1 when constant or zero

  void add_term(const JetMonomial& mono, const Rational& c);
  JetPolynomial& operator+=(const JetPolynomial& o);
  friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b);

  // point[l][q] = value of X_{l+1}^{(q)}; missing orders read as 0.
  Rational evaluate(const std::vector<std::vector<Rational>>& point) const;

  std::string str() const;

  friend bool operator==(const JetPolynomial& a, const JetPolynomial& b) {
    return a.ring_ == b.ring_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  Int dim_;
  std::map<JetMonomial, Rational, JetMonomialLess> terms_;
};

// Coefficients of t^0..t^m of f(sum_q X_1^(q) t^q, ..., sum_q X_N^(q) t^q),
// computed by truncated power-series arithmetic at precision m+1. Entry j may
// be zero (characteristic-p collapse); the list is positional.
std::vector<JetPolynomial> jet_equations(const SparsePolynomial& f, Int m);

struct JetSystemEntry {
  enum class Kind { Equation, Fiber };
  Kind kind = Kind::Equation;
  std::size_t factor = 0;     // index of the multiideal factor
  std::size_t generator = 0;  // generator index within the factor, or variable index for Fiber
  Int order = 0;              // q
  JetPolynomial poly;
};

struct JetSystem {
  Ring ring;
  Int dim = 0;        // ambient N
  Int max_order = 0;  // largest order in the variable universe
  bool fiber_only = false;  // all jet orders were zero; only fiber constraints emitted
  std::vector<JetSystemEntry> entries;
};

// For each factor i and generator f, the equations F^{(q)}, 0 <= q <= m_i - 1,
// followed by the N fiber constraints X_l^{(0)}. All m_i = 0 yields only the
// fiber constraints, flagged.
JetSystem jet_system(const std::vector<std::vector<SparsePolynomial>>& factor_gens,
                     const std::vector<Int>& m);

// Coefficient-wise reduction of an integer system; labels, slot order and zero
// slots are preserved.
JetSystem reduce_jet_system_mod_p(const JetSystem& system, Int p);
JetPolynomial reduce_jet_polynomial_mod_p(const JetPolynomial& f, Int p);

// Whether reducing the jet equations of an integer polynomial mod p equals the
// jet equations of the reduced polynomial, slot by slot. DegenerateLift means
// the polynomial itself reduces to zero, so the right-hand side is undefined.
enum class CommutationOutcome { Match, Mismatch, DegenerateLift };
CommutationOutcome commutation_check(const SparsePolynomial& f, Int m, Int p);

// Deterministic textual form: "vars:" line with the full variable universe,
// then one "poly[i]:" line per entry with terms in jet-monomial order.
std::string export_cas(const JetSystem& system);
std::string export_cas(const std::vector<JetPolynomial>& polys, Int dim, Int max_order);

}  // namespace singlift
