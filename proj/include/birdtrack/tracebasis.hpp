#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "birdtrack/diagram.hpp"
#include "birdtrack/permutation.hpp"
#include "birdtrack/singlets.hpp"
#include "birdtrack/symmetrizers.hpp"

namespace birdtrack {

/// Disjoint cycles covering 0..k-1, canonical order, 1-cycles explicit.
class CycleDecomposition {
 public:
  explicit CycleDecomposition(const Perm& p) : perm_(p) {
    require_permutation(p);
    cycles_ = to_cycles(p);
  }
  CycleDecomposition(const Cycles& cycles, int k) : CycleDecomposition(from_cycles(cycles, k)) {}
  static CycleDecomposition parse(const std::string& text, int k = 0) { return CycleDecomposition(parse_cycles(text, k)); }

  const Cycles& cycles() const { return cycles_; }
  const Perm& permutation() const { return perm_; }
  int size() const { return static_cast<int>(perm_.size()); }
  bool is_derangement() const {
    for (const auto& c : cycles_)
      if (c.size() == 1) return false;
    return true;
  }
  std::string to_string() const { return format_cycles(perm_); }

 private:
  Perm perm_;
  Cycles cycles_;
};

/// Singlet-pair birdtrack on (V, V*): delta on the outputs times delta on the inputs.
inline InvariantElement trace_pair() { return InvariantElement::primitive(LegSignature::parse("qb", Role::Operator), {1, 0}); }

/// Adjoint projector on (V, V*): identity - (1/N) trace pair.
inline InvariantElement adjoint_pair_diagram() {
  auto sig = LegSignature::parse("qb", Role::Operator);
  return InvariantElement::identity(sig) - RadicalCoefficient(RationalFunction(1) / RationalFunction::N()) * trace_pair();
}

/// Generator chains of every nontrivial cycle, Fierz-eliminated: the adjoint
/// projector acts on each (V_i, V*_i) pair that lies in a cycle of length > 1.
inline InvariantElement trace_basis_state(const CycleDecomposition& rho) {
  const int k = rho.size();
  InvariantElement state = bend(InvariantElement::permutation(rho.permutation()));
  const LegSignature ops = LegSignature::mixed(k, k);
  const InvariantElement adj = adjoint_pair_diagram();
  for (const auto& c : rho.cycles()) {
    if (c.size() < 2) continue;
    for (int i : c) state = apply(embed(adj, {i, k + i}, ops), state);
  }
  return state;
}

/// Identity first, then by decreasing number of cycles, then one-line order.
inline std::vector<Perm> trace_basis_order(int k) {
  auto perms = all_permutations(k);
  std::stable_sort(perms.begin(), perms.end(), [](const Perm& a, const Perm& b) { return cycle_count(a) > cycle_count(b); });
  return perms;
}

inline std::vector<InvariantElement> trace_basis_states(int k) {
  auto order = trace_basis_order(k);
  std::vector<InvariantElement> out(order.size());
  parallel_for(order.size(), [&](std::size_t i) { out[i] = trace_basis_state(CycleDecomposition(order[i])); });
  return out;
}

inline std::vector<InvariantElement> derangement_states(int k) {
  if (k < 2) fail(ErrorCode::OutOfRange, "derangements need k >= 2");
  std::vector<InvariantElement> out;
  for (const auto& p : trace_basis_order(k)) {
    CycleDecomposition c(p);
    if (c.is_derangement()) out.push_back(trace_basis_state(c));
  }
  return out;
}

/// d = s(123) + s(132), f = s(123) - s(132).
inline std::pair<InvariantElement, InvariantElement> df_states() {
  InvariantElement a = trace_basis_state(CycleDecomposition::parse("(1 2 3)", 3));
  InvariantElement b = trace_basis_state(CycleDecomposition::parse("(1 3 2)", 3));
  return {a + b, a - b};
}

/// Mutually orthogonal trace-basis states: for k = 3 the identity, the three
/// transpositions, f and d; otherwise Gram-Schmidt in trace-basis order.
inline std::vector<InvariantElement> orthogonal_trace_states(int k) {
  if (k == 3) {
    std::vector<InvariantElement> out;
    for (const char* c : {"(1)(2)(3)", "(1)(2 3)", "(1 2)(3)", "(1 3)(2)"})
      out.push_back(trace_basis_state(CycleDecomposition::parse(c, 3)));
    auto [d, f] = df_states();
    out.push_back(f);
    out.push_back(d);
    return out;
  }
  return gram_schmidt(trace_basis_states(k)).states;
}

inline std::vector<SingletOperator> normalized_trace_basis(int k) {
  if (k < 1) fail(ErrorCode::OutOfRange, "k must be positive");
  auto states = orthogonal_trace_states(k);
  std::vector<SingletOperator> out;
  for (std::size_t i = 0; i < states.size(); ++i) out.push_back(projector_from_state(states[i], static_cast<int>(i)));
  return out;
}

}  // namespace birdtrack
