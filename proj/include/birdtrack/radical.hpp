#pragma once

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "birdtrack/errors.hpp"
#include "birdtrack/polynomial.hpp"
#include "birdtrack/rational_function.hpp"

namespace birdtrack {

namespace detail {

/// v = s^2 * t with t squarefree; sign of v stays on t.
inline std::pair<mpz_class, mpz_class> integer_square_split(const mpz_class& v) {
  mpz_class rest = abs(v);
  mpz_class s = 1, t = 1;
  if (rest == 0) return {0, 0};
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    return {s, v < 0 ? mpz_class(-1) : mpz_class(1)};
  }
  for (mpz_class p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) t *= p;
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      s *= r;
      rest = 1;
      break;
    }
  }
  t *= rest;
  if (v < 0) t = -t;
  return {s, t};
}

/// P = mult^2 * radicand with radicand = t * R, t a squarefree positive
/// integer and R a primitive squarefree integer polynomial with positive
/// leading coefficient.
inline std::pair<RationalFunction, Polynomial> polynomial_square_split(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroRadicand, "square root of zero");
  mpq_class c = p.leading();
  Polynomial sq_part(1), free_part(1);
  if (p.degree() > 0) {
    auto factors = p.squarefree_factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::size_t mult = i + 1;
      for (std::size_t e = 0; e < mult / 2; ++e) sq_part *= factors[i];
      if (mult % 2) free_part *= factors[i];
    }
  }
  auto [c2, prim] = free_part.content_primitive();
  c *= c2;
  mpz_class nd = c.get_num() * c.get_den();
  auto [s, t] = integer_square_split(nd);
  if (t < 0) fail(ErrorCode::NegativeRadicand, "radicand " + p.to_string() + " has negative leading coefficient");
  mpq_class scale(s, c.get_den());
  scale.canonicalize();
  return {RationalFunction(sq_part.scaled(scale)), prim.scaled(mpq_class(t))};
}

}  // namespace detail

/// Exact real number sum_t q_t * sqrt(t) over squarefree positive integers t.
class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(const mpq_class& q) { add(1, q); }  // NOLINT

  void add(const mpz_class& radicand, const mpq_class& q) {
    if (q == 0 || radicand == 0) return;
    auto [s, t] = detail::integer_square_split(radicand);
    if (t < 0) fail(ErrorCode::NegativeRadicand, "negative radicand " + radicand.get_str());
    mpq_class& slot = parts_[t];
    slot += q * mpq_class(s);
    if (slot == 0) parts_.erase(t);
  }

  bool is_zero() const { return parts_.empty(); }
  bool is_rational() const { return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first == 1); }
  mpq_class rational_value() const {
    auto it = parts_.find(1);
    return it == parts_.end() ? mpq_class(0) : it->second;
  }
  const std::map<mpz_class, mpq_class>& parts() const { return parts_; }

  double to_double() const {
    double acc = 0;
    for (const auto& [t, q] : parts_) acc += q.get_d() * std::sqrt(t.get_d());
    return acc;
  }

  friend ExactReal operator+(ExactReal a, const ExactReal& b) {
    for (const auto& [t, q] : b.parts_) a.add(t, q);
    return a;
  }
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b) {
    ExactReal r;
    for (const auto& [t1, q1] : a.parts_)
      for (const auto& [t2, q2] : b.parts_) r.add(t1 * t2, q1 * q2);
    return r;
  }
  friend bool operator==(const ExactReal& a, const ExactReal& b) { return a.parts_ == b.parts_; }

  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (const auto& [t, q] : parts_) {
      if (!s.empty()) s += " + ";
      s += q.get_str();
      if (t != 1) s += "*sqrt(" + t.get_str() + ")";
    }
    return s;
  }

 private:
  std::map<mpz_class, mpq_class> parts_;
};

/// Element of Q(N)[sqrt(r) : r squarefree]: sum of multiplier * sqrt(radicand).
class RadicalCoefficient {
 public:
  using Terms = std::map<Polynomial, RationalFunction>;

  RadicalCoefficient() = default;
  RadicalCoefficient(long c) : RadicalCoefficient(RationalFunction(c)) {}             // NOLINT
  RadicalCoefficient(const mpq_class& c) : RadicalCoefficient(RationalFunction(c)) {} // NOLINT
  RadicalCoefficient(const RationalFunction& r) {                                      // NOLINT
    if (!r.is_zero()) terms_.emplace(Polynomial(1), r);
  }

  /// multiplier * sqrt(radicand) for an arbitrary nonzero polynomial radicand.
  static RadicalCoefficient term(const RationalFunction& multiplier, const Polynomial& radicand) {
    if (multiplier.is_zero()) return {};
    auto [m, r] = detail::polynomial_square_split(radicand);
    RadicalCoefficient out;
    out.terms_.emplace(r, multiplier * m);
    return out;
  }

  /// sqrt(a/b) = sqrt(a*b)/b.
  static RadicalCoefficient sqrt(const RationalFunction& r) {
    if (r.is_zero()) fail(ErrorCode::ZeroRadicand, "sqrt of zero normalization");
    return term(RationalFunction(1) / RationalFunction(r.den()), r.num() * r.den());
  }

  /// sqrt of a purely rational coefficient.
  static RadicalCoefficient sqrt(const RadicalCoefficient& c) {
    if (c.is_zero()) fail(ErrorCode::ZeroRadicand, "sqrt of zero normalization");
    if (!c.is_rational()) fail(ErrorCode::UnsupportedRadicalDivision, "nested radicals are not supported");
    return sqrt(c.rational_part());
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Polynomial(1)); }
  bool is_single_term() const { return terms_.size() == 1; }
  RationalFunction rational_part() const {
    auto it = terms_.find(Polynomial(1));
    return it == terms_.end() ? RationalFunction() : it->second;
  }
  const Terms& terms() const { return terms_; }

  RadicalCoefficient operator-() const {
    RadicalCoefficient r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  RadicalCoefficient& operator+=(const RadicalCoefficient& o) {
    for (const auto& [k, v] : o.terms_) accumulate(k, v);
    return *this;
  }
  RadicalCoefficient& operator-=(const RadicalCoefficient& o) {
    for (const auto& [k, v] : o.terms_) accumulate(k, -v);
    return *this;
  }
  friend RadicalCoefficient operator+(RadicalCoefficient a, const RadicalCoefficient& b) { return a += b; }
  friend RadicalCoefficient operator-(RadicalCoefficient a, const RadicalCoefficient& b) { return a -= b; }

  friend RadicalCoefficient operator*(const RadicalCoefficient& a, const RadicalCoefficient& b) {
    RadicalCoefficient r;
    if (a.is_zero() || b.is_zero()) return r;
    const Polynomial one(1);
    for (const auto& [ka, va] : a.terms_) {
      for (const auto& [kb, vb] : b.terms_) {
        RationalFunction m = va * vb;
        if (ka == one) {
          r.accumulate(kb, m);
        } else if (kb == one) {
          r.accumulate(ka, m);
        } else if (ka == kb) {
          r.accumulate(one, m * RationalFunction(ka));
        } else {
          auto [s, rad] = detail::polynomial_square_split(ka * kb);
          r.accumulate(rad, m * s);
        }
      }
    }
    return r;
  }
  RadicalCoefficient& operator*=(const RadicalCoefficient& o) { return *this = *this * o; }

  /// Division by a single-term coefficient m*sqrt(r): a*sqrt(r)/(m*r).
  friend RadicalCoefficient operator/(const RadicalCoefficient& a, const RadicalCoefficient& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero coefficient");
    if (!b.is_single_term()) fail(ErrorCode::UnsupportedRadicalDivision, "divisor has several radical terms");
    const auto& [rad, m] = *b.terms_.begin();
    if (rad == Polynomial(1)) return a * RadicalCoefficient(m.inverse());
    RadicalCoefficient root;
    root.terms_.emplace(rad, RationalFunction(1));
    return a * root * RadicalCoefficient((m * RationalFunction(rad)).inverse());
  }
  RadicalCoefficient& operator/=(const RadicalCoefficient& o) { return *this = *this / o; }

  friend bool operator==(const RadicalCoefficient& a, const RadicalCoefficient& b) { return a.terms_ == b.terms_; }

  bool has_pole_at(long n) const {
    for (const auto& [k, v] : terms_)
      if (v.has_pole_at(n)) return true;
    return false;
  }

  ExactReal eval_at(long n) const {
    ExactReal out;
    const mpq_class x(n);
    for (const auto& [k, v] : terms_) {
      mpq_class m = v(x);
      mpq_class rv = k(x);
      if (rv.get_den() != 1) fail(ErrorCode::ParseError, "non-integer radicand value");
      if (rv < 0) fail(ErrorCode::NegativeRadicand, "radicand " + k.to_string() + " negative at N=" + std::to_string(n));
      out.add(rv.get_num(), m);
    }
    return out;
  }

  /// Exact rational value; raises RadicalComparisonUnsupported if irrational at n.
  mpq_class eval_rational(long n) const {
    ExactReal e = eval_at(n);
    if (!e.is_rational())
      fail(ErrorCode::RadicalComparisonUnsupported, "coefficient " + to_string() + " is irrational at N=" + std::to_string(n));
    return e.rational_value();
  }

  double to_double(long n) const { return eval_at(n).to_double(); }

  std::string to_string(const std::string& var = "N") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms_) {
      if (!s.empty()) s += " + ";
      std::string m = v.to_string(var);
      if (k == Polynomial(1)) {
        s += m;
      } else {
        if (!v.is_one()) s += (v.num().coefficients().size() > 1 && v.is_polynomial() ? "(" + m + ")" : m) + "*";
        s += "sqrt(" + k.to_string(var) + ")";
      }
    }
    return s;
  }

 private:
  void accumulate(const Polynomial& key, const RationalFunction& v) {
    if (v.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Terms terms_;
};

}  // namespace birdtrack
