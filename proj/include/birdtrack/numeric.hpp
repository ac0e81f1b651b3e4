#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "birdtrack/diagram.hpp"
#include "birdtrack/errors.hpp"
#include "birdtrack/linalg.hpp"

namespace birdtrack {

inline constexpr std::uint64_t kDenseCap = 1000000;

/// Sparse exact tensor; flat index is row-major over `shape`.
class ExactTensor {
 public:
  using Entries = std::map<std::uint64_t, mpq_class>;

  ExactTensor() = default;
  explicit ExactTensor(std::vector<int> shape) : shape_(std::move(shape)) {
    strides_.assign(shape_.size(), 1);
    for (int a = static_cast<int>(shape_.size()) - 2; a >= 0; --a) strides_[a] = strides_[a + 1] * shape_[a + 1];
  }

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  std::uint64_t volume() const {
    std::uint64_t v = 1;
    for (int d : shape_) v *= d;
    return v;
  }
  const Entries& entries() const { return entries_; }
  std::uint64_t stride(int axis) const { return strides_[axis]; }

  std::uint64_t flat(const std::vector<int>& idx) const {
    std::uint64_t f = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) f += strides_[a] * idx[a];
    return f;
  }
  std::vector<int> unflat(std::uint64_t f) const {
    std::vector<int> idx(shape_.size());
    for (std::size_t a = 0; a < shape_.size(); ++a) {
      idx[a] = static_cast<int>(f / strides_[a]);
      f %= strides_[a];
    }
    return idx;
  }

  mpq_class at(const std::vector<int>& idx) const {
    auto it = entries_.find(flat(idx));
    return it == entries_.end() ? mpq_class(0) : it->second;
  }
  void add(std::uint64_t f, const mpq_class& v) {
    if (v == 0) return;
    auto [it, fresh] = entries_.emplace(f, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }
  void add(const std::vector<int>& idx, const mpq_class& v) { add(flat(idx), v); }

  ExactTensor scaled(const mpq_class& s) const {
    ExactTensor r(shape_);
    if (s == 0) return r;
    for (const auto& [f, v] : entries_) r.entries_.emplace(f, v * s);
    return r;
  }
  friend ExactTensor operator+(const ExactTensor& a, const ExactTensor& b) {
    if (a.shape_ != b.shape_) fail(ErrorCode::DimensionMismatch, "tensor shapes differ");
    ExactTensor r = a;
    for (const auto& [f, v] : b.entries_) r.add(f, v);
    return r;
  }
  friend ExactTensor operator-(const ExactTensor& a, const ExactTensor& b) { return a + b.scaled(-1); }
  friend bool operator==(const ExactTensor& a, const ExactTensor& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

  /// Moves axes: new axis i is old axis order[i].
  ExactTensor permuted(const std::vector<int>& order) const {
    std::vector<int> ns(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) ns[i] = shape_[order[i]];
    ExactTensor r(ns);
    for (const auto& [f, v] : entries_) {
      auto idx = unflat(f);
      std::vector<int> ni(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) ni[i] = idx[order[i]];
      r.entries_.emplace(r.flat(ni), v);
    }
    return r;
  }

  /// Matrix view: the first `row_axes` axes index rows.
  std::pair<std::uint64_t, std::uint64_t> matrix_dims(int row_axes) const {
    std::uint64_t rows = 1, cols = 1;
    for (int a = 0; a < rank(); ++a) (a < row_axes ? rows : cols) *= shape_[a];
    return {rows, cols};
  }

  RationalMatrix dense(int row_axes) const {
    auto [rows, cols] = matrix_dims(row_axes);
    if (rows * cols > kDenseCap) fail(ErrorCode::DimensionTooLarge, "dense matrix beyond 10^6 entries");
    RationalMatrix m(rows, std::vector<mpq_class>(cols, mpq_class(0)));
    for (const auto& [f, v] : entries_) m[f / cols][f % cols] = v;
    return m;
  }

 private:
  std::vector<int> shape_;
  std::vector<std::uint64_t> strides_;
  Entries entries_;
};

/// Operator tensors (out axes then in axes) composed as matrices: a after b.
inline ExactTensor matmul(const ExactTensor& a, const ExactTensor& b) {
  if (a.shape() != b.shape() || a.rank() % 2) fail(ErrorCode::DimensionMismatch, "operator tensors differ");
  const std::uint64_t cols = a.matrix_dims(a.rank() / 2).second;
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, const mpq_class*>>> b_rows;
  for (const auto& [f, v] : b.entries()) b_rows[f / cols].emplace_back(f % cols, &v);
  ExactTensor r(a.shape());
  for (const auto& [f, v] : a.entries()) {
    auto it = b_rows.find(f % cols);
    if (it == b_rows.end()) continue;
    const std::uint64_t row = f / cols;
    for (const auto& [c, w] : it->second) r.add(row * cols + c, v * *w);
  }
  return r;
}

inline mpq_class tensor_trace(const ExactTensor& a) {
  const auto [rows, cols] = a.matrix_dims(a.rank() / 2);
  if (rows != cols) fail(ErrorCode::DimensionMismatch, "trace of a non-square map");
  mpq_class t = 0;
  for (const auto& [f, v] : a.entries())
    if (f / cols == f % cols) t += v;
  return t;
}

/// Transpose of an operator tensor (swap out and in axes).
inline ExactTensor transpose(const ExactTensor& a) {
  const int S = a.rank() / 2;
  std::vector<int> order(a.rank());
  for (int s = 0; s < S; ++s) {
    order[s] = S + s;
    order[S + s] = s;
  }
  return a.permuted(order);
}

/// |u><v| for two state tensors of equal shape (real entries).
inline ExactTensor outer(const ExactTensor& u, const ExactTensor& v) {
  std::vector<int> shape = u.shape();
  shape.insert(shape.end(), v.shape().begin(), v.shape().end());
  ExactTensor r(shape);
  const std::uint64_t cols = v.volume();
  for (const auto& [fu, a] : u.entries())
    for (const auto& [fv, b] : v.entries()) r.add(fu * cols + fv, a * b);
  return r;
}

inline mpq_class dot(const ExactTensor& u, const ExactTensor& v) {
  if (u.shape() != v.shape()) fail(ErrorCode::DimensionMismatch, "dot of different shapes");
  mpq_class s = 0;
  for (const auto& [f, a] : u.entries()) {
    auto it = v.entries().find(f);
    if (it != v.entries().end()) s += a * it->second;
  }
  return s;
}

inline int exact_rank(const ExactTensor& a, int row_axes) { return exact_rank(a.dense(row_axes)); }

namespace detail {

inline std::uint64_t checked_volume(int n, int axes) {
  std::uint64_t v = 1;
  for (int i = 0; i < axes; ++i) {
    v *= static_cast<std::uint64_t>(n);
    if (v > kDenseCap) fail(ErrorCode::DimensionTooLarge, "N^" + std::to_string(axes) + " exceeds 10^6 at N=" + std::to_string(n));
  }
  return v;
}

/// Calls f(flat index) for every index pattern of the linking at N = n.
template <typename F>
void for_each_delta(const LegSignature& sig, const Perm& linking, int n, const std::vector<std::uint64_t>& strides, F&& f) {
  const int L = sig.num_lines();
  std::vector<std::uint64_t> step(L);
  for (int j = 0; j < L; ++j) step[j] = strides[sig.lower_port(j)] + strides[sig.upper_port(linking[j])];
  std::vector<int> val(L, 0);
  std::uint64_t cur = 0;
  while (true) {
    f(cur);
    int j = L - 1;
    while (j >= 0 && val[j] == n - 1) {
      cur -= step[j] * (n - 1);
      val[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++val[j];
    cur += step[j];
  }
}

}  // namespace detail

/// Explicit tensor of an element at N = n. Operators: axes are out-ports
/// then in-ports (rows = outputs). States: one axis per leg.
inline ExactTensor evaluate(const InvariantElement& a, int n) {
  if (n < 1) fail(ErrorCode::OutOfRange, "N must be positive");
  const auto& sig = a.signature();
  const int P = sig.num_ports();
  detail::checked_volume(n, P);
  ExactTensor t(std::vector<int>(P, n));
  std::vector<std::uint64_t> strides(P);
  for (int p = 0; p < P; ++p) strides[p] = t.stride(p);
  for (const auto& [link, c] : a.terms()) {
    mpq_class v = c.eval_rational(n);
    if (v == 0) continue;
    detail::for_each_delta(sig, link, n, strides, [&](std::uint64_t f) { t.add(f, v); });
  }
  return t;
}

// ---------------------------------------------------------------------------
// Float path: unitary sampling, invariance and correlators.

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Dense complex vector of a state (radicals allowed).
inline ComplexVector evaluate_float(const InvariantElement& a, int n) {
  const auto& sig = a.signature();
  if (sig.is_operator()) fail(ErrorCode::SignatureMismatch, "float evaluation is for states");
  const int P = sig.num_ports();
  const std::uint64_t vol = detail::checked_volume(n, P);
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(vol));
  std::vector<std::uint64_t> strides(P, 1);
  for (int p = P - 2; p >= 0; --p) strides[p] = strides[p + 1] * n;
  for (const auto& [link, c] : a.terms()) {
    double w = c.to_double(n);
    detail::for_each_delta(sig, link, n, strides, [&](std::uint64_t f) { v[static_cast<Eigen::Index>(f)] += w; });
  }
  return v;
}

/// Deterministic special-unitary sample: Gaussian matrix, QR with phase fix,
/// then divided by an N-th root of its determinant.
inline ComplexMatrix sample_special_unitary(int n, std::uint64_t seed) {
  if (n < 2) fail(ErrorCode::OutOfRange, "special unitary sampling needs N >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double re = g(rng);
      double im = g(rng);
      z(i, j) = {re, im};
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    std::complex<double> d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  std::complex<double> det = q.determinant();
  q /= std::pow(det, 1.0 / n);
  return q;
}

/// Applies m along one axis of a dense tensor with `legs` axes of size n.
inline ComplexVector apply_on_axis(const ComplexVector& v, int n, int legs, int axis, const ComplexMatrix& m) {
  std::uint64_t inner = 1;
  for (int a = axis + 1; a < legs; ++a) inner *= n;
  const std::uint64_t outer = static_cast<std::uint64_t>(v.size()) / (inner * n);
  ComplexVector r = ComplexVector::Zero(v.size());
  for (std::uint64_t o = 0; o < outer; ++o)
    for (std::uint64_t i = 0; i < inner; ++i)
      for (int a = 0; a < n; ++a) {
        std::complex<double> acc = 0;
        for (int b = 0; b < n; ++b) acc += m(a, b) * v[static_cast<Eigen::Index>((o * n + b) * inner + i)];
        r[static_cast<Eigen::Index>((o * n + a) * inner + i)] = acc;
      }
  return r;
}

/// Each leg gets its own group element: U on fundamental legs, conj(U) on
/// antifundamental legs (the V* factor sits to the right, so the index
/// placement gives U* rather than U^dagger).
inline ComplexVector apply_group(const ComplexVector& v, const LegSignature& sig, int n,
                                 const std::vector<ComplexMatrix>& per_leg) {
  if (static_cast<int>(per_leg.size()) != sig.size())
    fail(ErrorCode::DimensionMismatch, "need one matrix per leg");
  ComplexVector r = v;
  for (int l = 0; l < sig.size(); ++l) {
    const auto& u = per_leg[l];
    if (u.rows() != n || u.cols() != n) fail(ErrorCode::DimensionMismatch, "matrix size differs from N");
    r = apply_on_axis(r, n, sig.size(), l, sig.slots()[l] == Orientation::Fundamental ? u : ComplexMatrix(u.conjugate()));
  }
  return r;
}

/// <state_i| (U_1 x ... x U_2k) |state_j>.
inline ComplexMatrix correlator_matrix(const std::vector<InvariantElement>& states, const std::vector<ComplexMatrix>& per_leg,
                                       int n) {
  if (states.empty()) return {};
  const auto& sig = states[0].signature();
  for (const auto& s : states)
    if (!(s.signature() == sig)) fail(ErrorCode::SignatureMismatch, "correlator states must share legs");
  if (static_cast<int>(per_leg.size()) != sig.size())
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(sig.size()) + " matrices, got " + std::to_string(per_leg.size()));
  std::vector<ComplexVector> vs, ws;
  for (const auto& s : states) {
    vs.push_back(evaluate_float(s, n));
    ws.push_back(apply_group(vs.back(), sig, n, per_leg));
  }
  const auto k = static_cast<Eigen::Index>(states.size());
  ComplexMatrix m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = vs[i].dot(ws[j]);
  return m;
}

/// Largest |W v - v| with the same U on every leg.
inline double invariance_residual(const InvariantElement& state, const ComplexMatrix& u, int n) {
  ComplexVector v = evaluate_float(state, n);
  ComplexVector w = apply_group(v, state.signature(), n, std::vector<ComplexMatrix>(state.signature().size(), u));
  return (w - v).cwiseAbs().maxCoeff();
}

/// Generalized Gell-Mann matrices normalized to Tr(t^a t^b) = delta^{ab}.
inline std::vector<ComplexMatrix> su_generators(int n) {
  std::vector<ComplexMatrix> out;
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix a = ComplexMatrix::Zero(n, n), b = ComplexMatrix::Zero(n, n);
      a(j, k) = a(k, j) = s;
      b(j, k) = {0, -s};
      b(k, j) = {0, s};
      out.push_back(a);
      out.push_back(b);
    }
  for (int l = 1; l < n; ++l) {
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    const double c = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) d(j, j) = c;
    d(l, l) = -l * c;
    out.push_back(d);
  }
  return out;
}

}  // namespace birdtrack
