#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "birdtrack/diagram.hpp"
#include "birdtrack/numeric.hpp"
#include "birdtrack/permutation.hpp"
#include "birdtrack/singlets.hpp"
#include "birdtrack/symmetrizers.hpp"

namespace birdtrack {

// ---------------------------------------------------------------------------
// Young diagrams with antifundamental columns.

/// Rows padded with zeros to length n.
inline std::vector<int> padded_rows(const YoungShape& s, int n) {
  if (s.num_rows() > n) fail(ErrorCode::InvalidShape, s.to_string() + " has more than " + std::to_string(n) + " rows");
  std::vector<int> r = s.rows();
  r.resize(n, 0);
  return r;
}

inline YoungShape shape_from_rows(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return YoungShape(rows);
}

inline bool weakly_decreasing(const std::vector<int>& r) {
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] > r[i - 1]) return false;
  return true;
}

/// Adds one box (one fundamental factor), at most n rows.
inline std::vector<YoungShape> add_fundamental(const YoungShape& s, int n) {
  std::vector<YoungShape> out;
  auto rows = padded_rows(s, n);
  for (int r = 0; r < n; ++r) {
    auto t = rows;
    ++t[r];
    if (weakly_decreasing(t)) out.push_back(shape_from_rows(t));
  }
  return out;
}

/// Adds N-1 boxes, no two in the same row, keeping at most N rows; each
/// choice is fixed by the single row that receives no box.
inline std::vector<YoungShape> pieri_add_antifundamental(const YoungShape& s, int n) {
  if (n < 2) fail(ErrorCode::OutOfRange, "N must be at least 2");
  std::vector<YoungShape> out;
  auto rows = padded_rows(s, n);
  for (int skip = 0; skip < n; ++skip) {
    auto t = rows;
    for (int r = 0; r < n; ++r)
      if (r != skip) ++t[r];
    if (weakly_decreasing(t)) out.push_back(shape_from_rows(t));
  }
  std::sort(out.begin(), out.end(), [](const YoungShape& a, const YoungShape& b) { return a > b; });
  return out;
}

/// Drops columns of length n (SU(n) determinant factors).
inline YoungShape strip_full_columns(const YoungShape& s, int n) {
  if (s.num_rows() < n) return s;
  auto rows = padded_rows(s, n);
  const int full = rows[n - 1];
  for (auto& r : rows) r -= full;
  return shape_from_rows(rows);
}

/// m single boxes, then n antifundamental strips; shapes with multiplicity.
inline std::vector<YoungShape> lr_decomposition(int m, int n, int n_param) {
  if (m < 0 || n < 0) fail(ErrorCode::OutOfRange, "m, n must be non-negative");
  if (n_param < 1 || (n > 0 && n_param < 2)) fail(ErrorCode::OutOfRange, "N too small");
  std::vector<YoungShape> cur{YoungShape()};
  for (int i = 0; i < m; ++i) {
    std::vector<YoungShape> next;
    for (const auto& s : cur)
      for (auto& t : add_fundamental(s, n_param)) next.push_back(std::move(t));
    cur = std::move(next);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<YoungShape> next;
    for (const auto& s : cur)
      for (auto& t : pieri_add_antifundamental(s, n_param)) next.push_back(std::move(t));
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(), [](const YoungShape& a, const YoungShape& b) { return a > b; });
  return cur;
}

/// Sum of SU(n_param) dimensions after stripping full columns.
inline mpq_class lr_total_dimension(const std::vector<YoungShape>& shapes, int n_param) {
  mpq_class total = 0;
  for (const auto& s : shapes) total += irrep_dimension_at(strip_full_columns(s, n_param), n_param);
  return total;
}

// ---------------------------------------------------------------------------
// Transient singlets.

struct TransientParams {
  int a = 0;
  int b = 0;
  int k = 0;
  int alpha = 0;
  friend bool operator==(const TransientParams&, const TransientParams&) = default;
};

/// All (a, b, k) >= 0 with a + b >= 1 and m - aN = n - bN = k.
inline std::vector<TransientParams> transient_singlet_params(int m, int n, int n_param) {
  if (m < 0 || n < 0) fail(ErrorCode::OutOfRange, "m, n must be non-negative");
  if (n_param < 2) fail(ErrorCode::OutOfRange, "N must be at least 2");
  std::vector<TransientParams> out;
  for (int a = 0; a * n_param <= m; ++a) {
    const int k = m - a * n_param;
    if ((n - k) < 0 || (n - k) % n_param) continue;
    const int b = (n - k) / n_param;
    if (a + b < 1) continue;
    out.push_back({a, b, k, (a + b) * (n_param - 1) + k});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Levi-Civita tensor at fixed N (raw integer entries, no phase).

inline int sequence_sign(const std::vector<int>& seq) {
  int s = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) s = -s;
    }
  return s;
}

inline ExactTensor epsilon_tensor(int n) {
  if (n < 2) fail(ErrorCode::OutOfRange, "epsilon needs N >= 2");
  detail::checked_volume(n, n);
  ExactTensor e(std::vector<int>(n, n));
  for (const auto& p : all_permutations(n)) e.add(p, sign(p));
  return e;
}

struct LeibnizResult {
  ExactTensor tensor;
  mpq_class pair_factor;  // 1/(N-j)!, applied once per epsilon pair
};

/**
 * Contracts epsilon_{c_1..c_j a_1..a_{N-j}} against the listed axes (a_i is
 * axes[i]); the j new axes replace them at the position of the smallest
 * listed axis.
 */
inline LeibnizResult leibniz_translate(const ExactTensor& t, const std::vector<int>& axes, int j, int n) {
  if (j < 1 || j > n - 1) fail(ErrorCode::BadBlockSize, "j must lie in 1..N-1");
  if (static_cast<int>(axes.size()) != n - j)
    fail(ErrorCode::BadBlockSize, "block has " + std::to_string(axes.size()) + " legs, expected N-j = " + std::to_string(n - j));
  std::vector<char> in_block(t.rank(), 0);
  for (int a : axes) {
    if (a < 0 || a >= t.rank() || in_block[a]) fail(ErrorCode::BadBlockSize, "invalid block axis");
    if (t.shape()[a] != n) fail(ErrorCode::DimensionMismatch, "block axis dimension differs from N");
    in_block[a] = 1;
  }
  const int first = *std::min_element(axes.begin(), axes.end());
  std::vector<int> keep_before, keep_after;
  for (int a = 0; a < t.rank(); ++a) {
    if (in_block[a]) continue;
    (a < first ? keep_before : keep_after).push_back(a);
  }
  std::vector<int> shape;
  for (int a : keep_before) shape.push_back(t.shape()[a]);
  for (int i = 0; i < j; ++i) shape.push_back(n);
  for (int a : keep_after) shape.push_back(t.shape()[a]);
  ExactTensor r(shape);
  std::vector<int> seq(n), idx_out(shape.size());
  for (const auto& [f, v] : t.entries()) {
    auto idx = t.unflat(f);
    std::vector<char> used(n, 0);
    bool distinct = true;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      int val = idx[axes[i]];
      if (used[val]) {
        distinct = false;
        break;
      }
      used[val] = 1;
      seq[j + i] = val;
    }
    if (!distinct) continue;
    std::vector<int> rest;
    for (int x = 0; x < n; ++x)
      if (!used[x]) rest.push_back(x);
    std::size_t pos = 0;
    for (int a : keep_before) idx_out[pos++] = idx[a];
    const std::size_t cpos = pos;
    pos += j;
    for (int a : keep_after) idx_out[pos++] = idx[a];
    do {
      for (int i = 0; i < j; ++i) {
        seq[i] = rest[i];
        idx_out[cpos + i] = rest[i];
      }
      r.add(idx_out, v * sequence_sign(seq));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return {r, mpq_class(1, factorial(n - j))};
}

/**
 * Translates the same slot block on both sides of an operator tensor (S out
 * axes then S in axes) and applies the pair factor once. `in_order` lets the
 * input side feed the epsilon in a different leg order.
 */
inline ExactTensor translate_both_sides(const ExactTensor& op, const std::vector<int>& out_slots,
                                        const std::vector<int>& in_slots, int j, int n) {
  const int S = op.rank() / 2;
  LeibnizResult first = leibniz_translate(op, out_slots, j, n);
  const int shift = j - (n - j);
  std::vector<int> in_axes;
  for (int s : in_slots) in_axes.push_back(S + s + shift);
  LeibnizResult second = leibniz_translate(first.tensor, in_axes, j, n);
  return second.tensor.scaled(first.pair_factor);
}

struct LrProjectorResult {
  ExactTensor projector;   // operator on (V, V*) with axes out q, out b, in q, in b
  mpq_class rescale;       // factor applied to reach idempotency
};

inline LrProjectorResult rescale_to_idempotent(const ExactTensor& r) {
  mpq_class tr = tensor_trace(r);
  mpq_class tr2 = tensor_trace(matmul(r, r));
  if (tr == 0 || tr2 == 0) fail(ErrorCode::NotProportional, "translated operator has no idempotent rescaling");
  mpq_class lambda = tr / tr2;
  ExactTensor p = r.scaled(lambda);
  if (!(matmul(p, p) == p)) fail(ErrorCode::NotProportional, "translated operator is not a multiple of a projector");
  return {p, lambda};
}

/// Projector of the single-column tableau with legs 2..N turned into one V* leg.
inline LrProjectorResult lr_singlet_projector(int n) {
  std::vector<int> all(n), tail;
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int i = 1; i < n; ++i) tail.push_back(i);
  ExactTensor p = evaluate(antisymmetrizer(all, n), n);
  return rescale_to_idempotent(translate_both_sides(p, tail, tail, 1, n));
}

/// Hermitian projector alpha S12 A_{1,3..N} S12 with legs 2..N turned into one V* leg.
inline LrProjectorResult lr_adjoint_projector(int n) {
  if (n < 3) fail(ErrorCode::OutOfRange, "adjoint construction needs N >= 3");
  std::vector<int> col{0}, tail;
  for (int i = 2; i < n; ++i) col.push_back(i);
  for (int i = 1; i < n; ++i) tail.push_back(i);
  InvariantElement e = compose(compose(symmetrizer({0, 1}, n), antisymmetrizer(col, n)), symmetrizer({0, 1}, n));
  InvariantElement ee = compose(e, e);
  const auto& [p0, c0] = *e.terms().begin();
  RadicalCoefficient c = ee.coefficient(p0) / c0;
  if (!(ee == c * e)) fail(ErrorCode::NotProportional, "Hermitian adjoint operator");
  ExactTensor p = evaluate((RadicalCoefficient(1) / c) * e, n);
  return rescale_to_idempotent(translate_both_sides(p, tail, tail, 1, n));
}

// ---------------------------------------------------------------------------
// Baryon equivalence at N = 3.

struct BaryonReport {
  bool main_path = false;
  bool untwisted = false;
  bool one_sided_flip_is_negative = false;
  bool correlator = false;
  double max_correlator_deviation = 0;
  std::string failure;
  bool ok() const { return main_path && untwisted && one_sided_flip_is_negative && correlator; }
};

/// epsilon_{ijk} epsilon_{lmn} U1_{il} U2_{jm} U3_{kn}, raw epsilon.
inline std::complex<double> baryon_correlator(const ComplexMatrix& u1, const ComplexMatrix& u2, const ComplexMatrix& u3) {
  std::complex<double> s = 0;
  auto perms = all_permutations(3);
  for (const auto& p : perms)
    for (const auto& q : perms) s += double(sign(p) * sign(q)) * u1(p[0], q[0]) * u2(p[1], q[1]) * u3(p[2], q[2]);
  return s;
}

/**
 * (i) The normalized antisymmetric Mixed(2,2) projector with both V* legs
 * turned into one V leg on each side equals A_123; (ii) the same with the
 * legs fed in reversed order on both sides; (iii) reversing one side only
 * flips the sign; (iv) the y1 = y2 = x3 limit of the antisymmetric
 * quadrupole entry equals the baryon correlator for `samples` unitaries.
 */
inline BaryonReport verify_baryon_equivalence(int n = 3, int samples = 10, std::uint64_t seed = 1) {
  BaryonReport rep;
  if (n != 3) {
    rep.failure = "baryon equivalence is stated at N=3";
    return rep;
  }
  InvariantElement psi = bend(antisymmetrizer({0, 1}, 2));
  ExactTensor v = evaluate(psi, n);
  ExactTensor proj = outer(v, v).scaled(1 / dot(v, v));
  ExactTensor target = evaluate(antisymmetrizer({0, 1, 2}, 3), n);
  rep.main_path = translate_both_sides(proj, {2, 3}, {2, 3}, 1, n) == target;
  rep.untwisted = translate_both_sides(proj, {3, 2}, {3, 2}, 1, n) == target;
  rep.one_sided_flip_is_negative = translate_both_sides(proj, {3, 2}, {2, 3}, 1, n) == target.scaled(-1);
  if (!rep.main_path) rep.failure = "main path";
  else if (!rep.untwisted) rep.failure = "untwisting variant";
  else if (!rep.one_sided_flip_is_negative) rep.failure = "sign bookkeeping";

  const double norm = 3.0;  // <psi|psi> = N(N-1)/2 at N=3
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    ComplexMatrix x1 = sample_special_unitary(n, seed + 3 * s);
    ComplexMatrix x2 = sample_special_unitary(n, seed + 3 * s + 1);
    ComplexMatrix x3 = sample_special_unitary(n, seed + 3 * s + 2);
    ComplexMatrix c = correlator_matrix({psi}, {x1, x2, x3, x3}, n);
    std::complex<double> lhs = c(0, 0) / norm;
    std::complex<double> rhs = baryon_correlator(x1, x2, x3) / 6.0;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  rep.max_correlator_deviation = worst;
  rep.correlator = worst < 1e-10;
  if (rep.failure.empty() && !rep.correlator) rep.failure = "correlator coincidence limit";
  return rep;
}

/**
 * Generic Mixed(alpha, alpha) singlet projector for transient parameters:
 * (a + b) antisymmetric (N-1)-blocks followed by the k-strand identity
 * singlet, each bent, tensored (epsilon blocks first) and reordered to all
 * fundamental legs first.
 */
inline InvariantElement transient_generic_projector(const TransientParams& p, int n) {
  std::vector<InvariantElement> blocks;
  std::vector<int> all;
  for (int i = 0; i < n - 1; ++i) all.push_back(i);
  for (int i = 0; i < p.a + p.b; ++i) blocks.push_back(bend(antisymmetrizer(all, n - 1)));
  if (p.k > 0) blocks.push_back(bend(InvariantElement::identity(LegSignature::mixed(p.k, 0))));
  if (blocks.empty()) fail(ErrorCode::OutOfRange, "empty transient construction");
  InvariantElement state = blocks[0];
  for (std::size_t i = 1; i < blocks.size(); ++i) state = tensor(state, blocks[i]);
  std::vector<int> order;
  const auto& slots = state.signature().slots();
  for (int s = 0; s < static_cast<int>(slots.size()); ++s)
    if (slots[s] == Orientation::Fundamental) order.push_back(s);
  for (int s = 0; s < static_cast<int>(slots.size()); ++s)
    if (slots[s] == Orientation::Antifundamental) order.push_back(s);
  state = reorder_legs(state, order);
  return expand(projector_from_state(state));
}

}  // namespace birdtrack
