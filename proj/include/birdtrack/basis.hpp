#pragma once

#include <string>
#include <vector>

#include "birdtrack/linalg.hpp"
#include "birdtrack/numeric.hpp"
#include "birdtrack/singlets.hpp"
#include "birdtrack/symmetrizers.hpp"
#include "birdtrack/tracebasis.hpp"

namespace birdtrack {

enum class BasisSource { Builtin, Trace, TraceOrthogonalize, Permutation };

inline BasisSource parse_source(const std::string& s) {
  if (s == "builtin") return BasisSource::Builtin;
  if (s == "trace") return BasisSource::Trace;
  if (s == "trace+orthogonalize") return BasisSource::TraceOrthogonalize;
  if (s == "permutation") return BasisSource::Permutation;
  fail(ErrorCode::ParseError, "unknown source '" + s + "' (builtin, trace, trace+orthogonalize, permutation)");
}

inline std::string to_string(BasisSource s) {
  switch (s) {
    case BasisSource::Builtin: return "builtin";
    case BasisSource::Trace: return "trace";
    case BasisSource::TraceOrthogonalize: return "trace+orthogonalize";
    case BasisSource::Permutation: return "permutation";
  }
  return "?";
}

/// k! singlet states on Mixed(k,k) for the given source.
inline std::vector<InvariantElement> basis_states(int k, BasisSource source) {
  if (k < 1) fail(ErrorCode::OutOfRange, "k must be positive");
  switch (source) {
    case BasisSource::Builtin: {
      std::vector<InvariantElement> out;
      for (const auto& op : builtin_orthogonal_basis(k)) out.push_back(singlet_state(op));
      return out;
    }
    case BasisSource::Trace: return trace_basis_states(k);
    case BasisSource::TraceOrthogonalize: return orthogonal_trace_states(k);
    case BasisSource::Permutation: {
      std::vector<InvariantElement> out;
      for (const auto& p : trace_basis_order(k)) out.push_back(singlet_state(InvariantElement::permutation(p)));
      return out;
    }
  }
  return {};
}

inline std::vector<SingletOperator> singlet_basis(int k, BasisSource source) {
  auto states = basis_states(k, source);
  std::vector<SingletOperator> out;
  for (std::size_t i = 0; i < states.size(); ++i) out.push_back(projector_from_state(states[i], static_cast<int>(i)));
  return out;
}

/// Projectors on the diagonal, transition operators off it.
inline std::vector<std::vector<SingletOperator>> singlet_table(const std::vector<InvariantElement>& states) {
  const std::size_t n = states.size();
  std::vector<RadicalCoefficient> beta(n);
  parallel_for(n, [&](std::size_t i) { beta[i] = projector_normalization(states[i]); });
  std::vector<std::vector<SingletOperator>> t(n, std::vector<SingletOperator>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SingletOperator& s = t[i][j];
      s.kind = i == j ? SingletOperator::Kind::Projector : SingletOperator::Kind::Transition;
      s.labels = {static_cast<int>(i), static_cast<int>(j)};
      s.ket = states[i];
      s.bra = states[j];
      if (i == j) s.normalization = beta[i];
      else if (!beta[i].is_zero() && !beta[j].is_zero()) s.normalization = RadicalCoefficient::sqrt(beta[i] * beta[j]);
    }
  return t;
}

/**
 * Exact rank of the Gram matrix of the source states at N = n. The
 * orthogonalized trace states span the raw trace states with constant
 * coefficients for k = 3 and over Q(N) otherwise, so their count is read off
 * the raw trace states to avoid poles of the Gram-Schmidt coefficients.
 */
inline int singlet_count(int k, int n, BasisSource source) {
  if (n < 1) fail(ErrorCode::OutOfRange, "N must be positive");
  if (source == BasisSource::TraceOrthogonalize) source = BasisSource::Trace;
  return exact_rank(specialize(gram_matrix(basis_states(k, source)), n));
}

/// e = scale * rational, for elements whose terms share one radical.
struct RadicalSplit {
  RadicalCoefficient scale;
  InvariantElement rational;
};

inline RadicalSplit split_radical(const InvariantElement& e) {
  for (const auto& [p, c] : e.terms())
    if (!c.is_rational()) return {c, (RadicalCoefficient(1) / c) * e};
  return {RadicalCoefficient(1), e};
}

inline InvariantElement rationalized(const InvariantElement& e) { return split_radical(e).rational; }

/// Independent oracle: rank of the explicit state vectors at N = n.
inline int numeric_state_rank(const std::vector<InvariantElement>& states, int n) {
  RationalMatrix rows;
  for (const auto& s : states) {
    ExactTensor t = evaluate(rationalized(s), n);
    std::vector<mpq_class> r(t.volume(), mpq_class(0));
    for (const auto& [f, v] : t.entries()) r[f] = v;
    rows.push_back(std::move(r));
  }
  return exact_rank(rows);
}

}  // namespace birdtrack
