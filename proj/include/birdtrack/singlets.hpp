#pragma once

#include <string>
#include <vector>

#include "birdtrack/diagram.hpp"
#include "birdtrack/linalg.hpp"
#include "birdtrack/parallel.hpp"
#include "birdtrack/radical.hpp"
#include "birdtrack/symmetrizers.hpp"

namespace birdtrack {

/// Rank-one presentation normalization * |ket><bra| on Mixed(k,k).
struct SingletOperator {
  enum class Kind { Projector, Transition };

  Kind kind = Kind::Projector;
  std::vector<int> labels;  // source indices (ket, bra)
  RadicalCoefficient normalization;
  InvariantElement ket;
  InvariantElement bra;  // stored as a ket

  bool is_zero() const { return normalization.is_zero() || ket.is_zero() || bra.is_zero(); }
  std::string kind_string() const { return kind == Kind::Projector ? "projector" : "transition"; }
};

inline InvariantElement singlet_state(const InvariantElement& op) { return bend(op); }

/// 1/<m|m>, or 0 when the state vanishes identically.
inline RadicalCoefficient projector_normalization(const InvariantElement& state) {
  RadicalCoefficient n = state.is_zero() ? RadicalCoefficient() : inner_product(state, state);
  return n.is_zero() ? RadicalCoefficient() : RadicalCoefficient(1) / n;
}

inline SingletOperator projector_from_state(const InvariantElement& state, int label = 0) {
  SingletOperator s;
  s.kind = SingletOperator::Kind::Projector;
  s.labels = {label, label};
  s.ket = state;
  s.bra = state;
  s.normalization = projector_normalization(state);
  return s;
}

inline SingletOperator transition_from_states(const InvariantElement& ket, const InvariantElement& bra, int lk = 0,
                                              int lb = 1) {
  if (ket == bra) return projector_from_state(ket, lk);
  if (!(ket.signature() == bra.signature())) fail(ErrorCode::SignatureMismatch, "transition between different spaces");
  SingletOperator s;
  s.kind = SingletOperator::Kind::Transition;
  s.labels = {lk, lb};
  s.ket = ket;
  s.bra = bra;
  RadicalCoefficient b1 = projector_normalization(ket), b2 = projector_normalization(bra);
  if (!b1.is_zero() && !b2.is_zero()) s.normalization = RadicalCoefficient::sqrt(b1 * b2);
  return s;
}

inline SingletOperator singlet_projector(const InvariantElement& op, int label = 0) {
  return projector_from_state(singlet_state(op), label);
}

inline SingletOperator transition_operator(const InvariantElement& o1, const InvariantElement& o2, int l1 = 0, int l2 = 1) {
  if (!(o1.signature() == o2.signature())) fail(ErrorCode::SignatureMismatch, "transition between different spaces");
  return transition_from_states(singlet_state(o1), singlet_state(o2), l1, l2);
}

inline InvariantElement expand(const SingletOperator& s) { return s.normalization * outer(s.ket, s.bra); }

inline SingletOperator dagger(const SingletOperator& s) {
  SingletOperator r = s;
  std::swap(r.ket, r.bra);
  if (r.labels.size() == 2) std::swap(r.labels[0], r.labels[1]);
  return r;
}

/// Rank-one product: n1 n2 <bra1|ket2> |ket1><bra2|.
inline SingletOperator multiply(const SingletOperator& a, const SingletOperator& b) {
  SingletOperator r;
  r.ket = a.ket;
  r.bra = b.bra;
  r.labels = {a.labels.empty() ? 0 : a.labels.front(), b.labels.empty() ? 0 : b.labels.back()};
  r.kind = r.ket == r.bra ? SingletOperator::Kind::Projector : SingletOperator::Kind::Transition;
  if (a.is_zero() || b.is_zero()) return r;
  r.normalization = a.normalization * b.normalization * inner_product(a.bra, b.ket);
  return r;
}

/// Equality as operators: compares the rank-one data first, then expansions.
inline bool equivalent(const SingletOperator& a, const SingletOperator& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.ket == b.ket && a.bra == b.bra) return a.normalization == b.normalization;
  return expand(a) == expand(b);
}

/// Tr(A^dagger B) = nA nB <ketA|ketB> <braB|braA>.
inline RadicalCoefficient inner_product(const SingletOperator& a, const SingletOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RadicalCoefficient kk = inner_product(a.ket, b.ket);
  if (kk.is_zero()) return {};
  return a.normalization * b.normalization * kk * inner_product(b.bra, a.bra);
}

inline std::vector<std::vector<RadicalCoefficient>> gram_matrix(const std::vector<InvariantElement>& states) {
  const std::size_t n = states.size();
  for (const auto& s : states)
    if (!(s.signature() == states[0].signature())) fail(ErrorCode::SignatureMismatch, "gram matrix over different spaces");
  std::vector<std::vector<RadicalCoefficient>> g(n, std::vector<RadicalCoefficient>(n));
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) jobs.emplace_back(i, j);
  parallel_for(jobs.size(), [&](std::size_t t) {
    auto [i, j] = jobs[t];
    g[i][j] = inner_product(states[i], states[j]);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) g[i][j] = g[j][i];
  return g;
}

inline RationalMatrix specialize(const std::vector<std::vector<RadicalCoefficient>>& g, int n) {
  RationalMatrix m(g.size(), std::vector<mpq_class>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m[i][j] = g[i][j].eval_rational(n);
  return m;
}

/// Positive definiteness at integer N makes a zero norm equivalent to a zero state.
inline bool is_dimensionally_null(const InvariantElement& state, int n) {
  if (state.is_zero()) return true;
  return inner_product(state, state).eval_at(n).is_zero();
}

}  // namespace birdtrack
