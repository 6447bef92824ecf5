#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace singlift {

using Int = long long;

// Exact rational number, always in lowest terms with positive denominator.
// Thin value wrapper over GMP's mpq_class so canonicalization can never be
// forgotten and printing/parsing match the "a/b" | "a" wire format.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(Int n) : v_(static_cast<long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(Int num, Int den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  static std::optional<Rational> parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Smallest integer >= *this (resp. largest <= *this).
  mpz_class ceil() const;
  mpz_class floor() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // "a/b" with b > 0 and gcd(a,b) = 1, or plain "a" for integers.
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A rational extended with minus infinity, the bottom value of the minimal
// log discrepancy. Plain arithmetic is intentionally not provided; callers
// decide how -inf propagates.
class ExtRational {
 public:
  ExtRational() : finite_(true), r_(0) {}
  ExtRational(Rational r) : finite_(true), r_(std::move(r)) {}
  static ExtRational minus_infinity() { ExtRational e; e.finite_ = false; return e; }

  bool is_minus_infinity() const { return !finite_; }
  const Rational& finite() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.r_ == b.r_;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.r_ < b.r_;
  }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return a < b || a == b; }

  std::string str() const { return finite_ ? r_.str() : "-inf"; }

 private:
  bool finite_;
  Rational r_;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

}  // namespace singlift
