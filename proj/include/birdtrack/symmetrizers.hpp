#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "birdtrack/diagram.hpp"
#include "birdtrack/errors.hpp"
#include "birdtrack/permutation.hpp"
#include "birdtrack/radical.hpp"

namespace birdtrack {

namespace detail {

inline void check_slots(const std::vector<int>& slots, int m) {
  if (slots.empty()) fail(ErrorCode::OutOfRange, "empty slot set");
  std::vector<char> seen(m, 0);
  for (int s : slots) {
    if (s < 0 || s >= m) fail(ErrorCode::OutOfRange, "slot " + std::to_string(s + 1) + " outside 1.." + std::to_string(m));
    if (seen[s]) fail(ErrorCode::OutOfRange, "repeated slot " + std::to_string(s + 1));
    seen[s] = 1;
  }
}

inline InvariantElement signed_sum(const std::vector<int>& slots, int m, bool alternating) {
  check_slots(slots, m);
  const mpq_class w(1, factorial(static_cast<int>(slots.size())));
  InvariantElement e(LegSignature::mixed(m, 0));
  for (const auto& p : permutations_of(slots, m)) e.add_term(p, alternating && sign(p) < 0 ? mpq_class(-w) : w);
  return e;
}

}  // namespace detail

/// Symmetrizer over 0-based `slots` of V^m.
inline InvariantElement symmetrizer(const std::vector<int>& slots, int m) {
  return detail::signed_sum(slots, m, false);
}
inline InvariantElement antisymmetrizer(const std::vector<int>& slots, int m) {
  return detail::signed_sum(slots, m, true);
}

/// Partition with weakly decreasing positive rows.
class YoungShape {
 public:
  YoungShape() = default;
  explicit YoungShape(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1]))
        fail(ErrorCode::InvalidShape, "rows must be positive and weakly decreasing");
    }
  }

  /// "[2,1]"
  static YoungShape parse(const std::string& text) {
    std::vector<int> rows;
    std::string t;
    for (char c : text)
      if (c != '[' && c != ']' && c != ' ') t += c;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        rows.push_back(std::stoi(item));
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "shape entry '" + item + "'");
      }
    }
    return YoungShape(rows);
  }

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const {
    int s = 0;
    for (int r : rows_) s += r;
    return s;
  }
  bool empty() const { return rows_.empty(); }

  YoungShape conjugate() const {
    std::vector<int> cols;
    if (!rows_.empty())
      for (int c = 0; c < rows_[0]; ++c) {
        int h = 0;
        for (int r : rows_) h += (r > c);
        cols.push_back(h);
      }
    return YoungShape(cols);
  }

  int hook(int r, int c) const {
    int arm = rows_[r] - c - 1;
    int leg = 0;
    for (int i = r + 1; i < num_rows() && rows_[i] > c; ++i) ++leg;
    return arm + leg + 1;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) s += (i ? "," : "") + std::to_string(rows_[i]);
    return s + "]";
  }

  friend bool operator==(const YoungShape& a, const YoungShape& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const YoungShape& a, const YoungShape& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<int> rows_;
};

/// Filling of a shape with 1..m (stored 0-based), strictly increasing along rows and columns.
class StandardTableau {
 public:
  explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lens;
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    shape_ = YoungShape(lens);
    const int m = shape_.size();
    std::vector<char> seen(m, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        int v = rows_[i][j];
        if (v < 0 || v >= m || seen[v]) fail(ErrorCode::InvalidTableau, "entries must be 1.." + std::to_string(m));
        seen[v] = 1;
        if (j > 0 && rows_[i][j - 1] >= v) fail(ErrorCode::InvalidTableau, "rows must increase");
        if (i > 0 && rows_[i - 1][j] >= v) fail(ErrorCode::InvalidTableau, "columns must increase");
      }
  }

  /// "1 2 / 3"
  static StandardTableau parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, '/')) {
      std::stringstream rs(row);
      std::vector<int> r;
      std::string tok;
      while (rs >> tok) {
        try {
          r.push_back(std::stoi(tok) - 1);
        } catch (const std::exception&) {
          fail(ErrorCode::ParseError, "tableau entry '" + tok + "'");
        }
      }
      if (!r.empty()) rows.push_back(std::move(r));
    }
    return StandardTableau(rows);
  }

  const YoungShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<std::vector<int>> columns() const {
    std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_[0].size());
    for (const auto& r : rows_)
      for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
    return cols;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += " / ";
      for (std::size_t j = 0; j < rows_[i].size(); ++j) s += (j ? " " : "") + std::to_string(rows_[i][j] + 1);
    }
    return s;
  }

 private:
  std::vector<std::vector<int>> rows_;
  YoungShape shape_;
};

/// All standard tableaux of a shape.
inline std::vector<StandardTableau> standard_tableaux(const YoungShape& shape) {
  std::vector<StandardTableau> out;
  const int m = shape.size();
  std::vector<std::vector<int>> rows(shape.num_rows());
  // Place 0..m-1 one at a time at the end of a row where it stays standard.
  auto rec = [&](auto&& self, int v) -> void {
    if (v == m) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < shape.num_rows(); ++r) {
      int len = static_cast<int>(rows[r].size());
      if (len >= shape.rows()[r]) continue;
      if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
      rows[r].push_back(v);
      self(self, v + 1);
      rows[r].pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// All partitions of m, largest first.
inline std::vector<YoungShape> partitions(int m) {
  std::vector<YoungShape> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int r = std::min(left, max); r >= 1; --r) {
      cur.push_back(r);
      self(self, left - r, r);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

/// Row symmetrizers after column antisymmetrizers, scaled to be idempotent.
inline InvariantElement young_projector(const StandardTableau& t) {
  const int m = t.shape().size();
  InvariantElement e = InvariantElement::identity(LegSignature::mixed(m, 0));
  for (const auto& r : t.rows())
    if (r.size() > 1) e = compose(e, symmetrizer(r, m));
  for (const auto& c : t.columns())
    if (c.size() > 1) e = compose(e, antisymmetrizer(c, m));
  InvariantElement ee = compose(e, e);
  const auto& [p0, c0] = *e.terms().begin();
  RadicalCoefficient c = ee.coefficient(p0) / c0;
  if (c.is_zero() || !(ee == c * e)) fail(ErrorCode::NotProportional, "e*e is not a multiple of e for " + t.to_string());
  return (RadicalCoefficient(1) / c) * e;
}

/// Factors over hooks: prod (N + col - row) / prod hook.
inline RationalFunction irrep_dimension(const YoungShape& shape) {
  Polynomial num(1);
  long hooks = 1;
  for (int r = 0; r < shape.num_rows(); ++r)
    for (int c = 0; c < shape.rows()[r]; ++c) {
      num *= Polynomial{mpq_class(c - r), mpq_class(1)};
      hooks *= shape.hook(r, c);
    }
  return RationalFunction(num.scaled(mpq_class(1, hooks)));
}

inline mpq_class irrep_dimension_at(const YoungShape& shape, long n) { return irrep_dimension(shape)(n); }

/// Hermitian projection and transition operators on V^k for k <= 3.
inline std::vector<InvariantElement> builtin_orthogonal_basis(int k) {
  if (k < 1) fail(ErrorCode::OutOfRange, "k must be positive");
  if (k > 3) fail(ErrorCode::UnsupportedK, "builtin sets stop at k=3; use the trace basis with gram_schmidt");
  if (k == 1) return {InvariantElement::identity(LegSignature::mixed(1, 0))};
  if (k == 2) return {symmetrizer({0, 1}, 2), antisymmetrizer({0, 1}, 2)};
  const auto S12 = symmetrizer({0, 1}, 3), A12 = antisymmetrizer({0, 1}, 3);
  const auto S23 = symmetrizer({1, 2}, 3), A23 = antisymmetrizer({1, 2}, 3);
  const auto s23 = InvariantElement::permutation("(2 3)", 3);
  const RadicalCoefficient four_thirds(mpq_class(4, 3));
  const RadicalCoefficient root = RadicalCoefficient::sqrt(RationalFunction(mpq_class(4, 3)));
  return {
      symmetrizer({0, 1, 2}, 3),
      four_thirds * compose(compose(S12, A23), S12),
      root * compose(compose(S12, s23), A12),
      root * compose(compose(A12, s23), S12),
      four_thirds * compose(compose(A12, S23), A12),
      antisymmetrizer({0, 1, 2}, 3),
  };
}

struct GramSchmidtResult {
  std::vector<InvariantElement> states;
  std::vector<int> kept;     // source index of each output state
  std::vector<int> dropped;  // source indices whose projection vanished (ZeroNormAtGenericN)
};

/// Unnormalized Gram-Schmidt over Q(N) in input order.
inline GramSchmidtResult gram_schmidt(const std::vector<InvariantElement>& states) {
  GramSchmidtResult out;
  std::vector<RadicalCoefficient> norms;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i > 0 && !(states[i].signature() == states[0].signature()))
      fail(ErrorCode::SignatureMismatch, "gram_schmidt states must share a signature");
    InvariantElement v = states[i];
    for (std::size_t j = 0; j < out.states.size(); ++j) {
      RadicalCoefficient ov = inner_product(out.states[j], states[i]);
      if (ov.is_zero()) continue;
      v -= (ov / norms[j]) * out.states[j];
    }
    RadicalCoefficient nv = v.is_zero() ? RadicalCoefficient() : inner_product(v, v);
    if (nv.is_zero()) {
      out.dropped.push_back(static_cast<int>(i));
      continue;
    }
    out.states.push_back(std::move(v));
    out.kept.push_back(static_cast<int>(i));
    norms.push_back(nv);
  }
  return out;
}

}  // namespace birdtrack
