#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

#include "birdtrack/errors.hpp"
#include "birdtrack/polynomial.hpp"

namespace birdtrack {

/// Element of Q(N) kept as num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                   // NOLINT
  RationalFunction(const mpq_class& c) : num_(c), den_(1) {}       // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}      // NOLINT
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  static RationalFunction N() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_ == Polynomial(1) && num_ == Polynomial(1); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  mpq_class constant_value() const { return num_.constant_term(); }

  /// Value at N = x; raises PoleAtN when the denominator vanishes.
  mpq_class operator()(const mpq_class& x) const {
    mpq_class d = den_(x);
    if (d == 0) fail(ErrorCode::PoleAtN, "pole of " + to_string() + " at N=" + x.get_str());
    return num_(x) / d;
  }
  bool has_pole_at(const mpq_class& x) const { return den_(x) == 0; }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) {
      RationalFunction r;
      r.num_ = a.num_ * b.num_;
      return r;
    }
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const { return RationalFunction(1) / *this; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

  std::string to_string(const std::string& var = "N") const {
    if (den_ == Polynomial(1)) return num_.to_string(var);
    auto wrap = [&](const Polynomial& p) {
      std::string s = p.to_string(var);
      bool simple = p.is_constant() || (p.coefficients().size() == 2 && p.coefficient(0) == 0);
      return simple ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    if (den_.degree() > 0) {
      Polynomial g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
    mpq_class lead = den_.leading();
    if (lead != 1) {
      num_ = num_.scaled(1 / lead);
      den_ = den_.scaled(1 / lead);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

}  // namespace birdtrack
