#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "birdtrack/errors.hpp"

namespace birdtrack {

/// Dense univariate polynomial in N over the rationals, lowest degree first.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) { if (c != 0) c_.emplace_back(c); }  // NOLINT(google-explicit-constructor)
  Polynomial(const mpq_class& c) { if (c != 0) c_.push_back(c); }  // NOLINT
  Polynomial(std::initializer_list<mpq_class> cs) : c_(cs) { trim(); }
  explicit Polynomial(std::vector<mpq_class> cs) : c_(std::move(cs)) { trim(); }

  /// N^k
  static Polynomial monomial(std::size_t k, const mpq_class& c = 1) {
    if (c == 0) return {};
    std::vector<mpq_class> cs(k + 1, mpq_class(0));
    cs[k] = c;
    return Polynomial(std::move(cs));
  }
  static Polynomial variable() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  mpq_class coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }
  mpq_class constant_term() const { return coefficient(0); }

  mpq_class operator()(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const mpq_class& s) const {
    if (s == 0) return {};
    Polynomial r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  /// Multiplies by N^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<mpq_class> r(k, mpq_class(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return scaled(1 / leading());
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(r));
  }

  /// Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (degree() < d.degree()) return {Polynomial{}, *this};
    std::vector<mpq_class> rem = c_;
    std::vector<mpq_class> q(c_.size() - d.c_.size() + 1, mpq_class(0));
    const mpq_class inv_lead = 1 / d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      const mpq_class f = rem[k + d.degree()] * inv_lead;
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    rem.resize(d.c_.size() - 1);
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
  }

  /// Exact quotient; the caller guarantees divisibility.
  Polynomial exact_div(const Polynomial& d) const { return divmod(d).first; }

  /// Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r.monic());
    }
    return a.monic();
  }

  /// Rational constant c and primitive integer polynomial p with positive
  /// leading coefficient such that *this == c * p.
  std::pair<mpq_class, Polynomial> content_primitive() const {
    if (is_zero()) return {mpq_class(0), Polynomial{}};
    mpz_class den_lcm = 1;
    for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& c : c_) {
      mpz_class v = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading() < 0) content = -content;
    return {content, scaled(1 / content)};
  }

  /// Square-free decomposition (Yun): monic factors f_1, f_2, ... with
  /// monic(*this) = prod f_i^i, pairwise coprime and square-free.
  std::vector<Polynomial> squarefree_factors() const {
    std::vector<Polynomial> out;
    if (degree() < 1) return out;
    Polynomial f = monic();
    Polynomial fp = f.derivative();
    Polynomial a = gcd(f, fp);
    Polynomial b = f.exact_div(a);
    Polynomial c = fp.exact_div(a);
    Polynomial d = c - b.derivative();
    while (b.degree() > 0) {
      Polynomial g = gcd(b, d);
      out.push_back(g);
      b = b.exact_div(g);
      c = d.exact_div(g);
      d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Total order: by degree, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      int s = cmp(a.c_[i], b.c_[i]);
      if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string(const std::string& var = "N") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const mpq_class& c = c_[i];
      if (c == 0) continue;
      mpq_class mag = abs(c);
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      bool unit = (mag == 1) && i > 0;
      if (!unit) s += mag.get_str();
      if (i > 0) {
        if (!unit) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<mpq_class> c_;
};

}  // namespace birdtrack
