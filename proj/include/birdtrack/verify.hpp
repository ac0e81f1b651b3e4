#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "birdtrack/basis.hpp"
#include "birdtrack/epsilon.hpp"
#include "birdtrack/json_io.hpp"
#include "birdtrack/numeric.hpp"
#include "birdtrack/singlets.hpp"
#include "birdtrack/tracebasis.hpp"

namespace birdtrack {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline RationalFunction poly_over(std::initializer_list<mpq_class> num, std::initializer_list<mpq_class> den = {1}) {
  return RationalFunction(Polynomial(num), Polynomial(den));
}

/// <a|b> at N = n through the exact tensor evaluation, radicals included.
inline ExactReal numeric_inner(const InvariantElement& a, const InvariantElement& b, int n) {
  auto sa = split_radical(a), sb = split_radical(b);
  mpq_class d = dot(evaluate(sa.rational, n), evaluate(sb.rational, n));
  return (sa.scale * sb.scale).eval_at(n) * ExactReal(d);
}

inline ExactReal numeric_trace(const InvariantElement& a, int n) {
  auto s = split_radical(a);
  return s.scale.eval_at(n) * ExactReal(tensor_trace(evaluate(s.rational, n)));
}

inline CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string err = body();
    return {name, err.empty(), err};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace detail

inline std::vector<RationalFunction> expected_builtin_norms() {
  using detail::poly_over;
  const auto sym = poly_over({0, 2, 3, 1}, {6});
  const auto mixed = poly_over({0, -1, 0, 1}, {3});
  const auto anti = poly_over({0, 2, -3, 1}, {6});
  return {sym, mixed, mixed, mixed, mixed, anti};
}

/// Library self-checks behind `birdtrack verify`.
inline std::vector<CheckResult> run_invariant_suite(std::uint64_t seed = 1) {
  using detail::run_check;
  std::vector<CheckResult> out;

  out.push_back(run_check("builtin k=3 squared norms", [] {
    auto states = basis_states(3, BasisSource::Builtin);
    auto expect = expected_builtin_norms();
    for (std::size_t i = 0; i < states.size(); ++i) {
      auto g = inner_product(states[i], states[i]);
      if (!(g == RadicalCoefficient(expect[i]))) return "state " + std::to_string(i) + ": " + g.to_string();
      for (std::size_t j = i + 1; j < states.size(); ++j)
        if (!inner_product(states[i], states[j]).is_zero()) return "states " + std::to_string(i) + "," + std::to_string(j) + " overlap";
    }
    return std::string();
  }));

  out.push_back(run_check("orthogonal trace states k=3", [] {
    auto states = orthogonal_trace_states(3);
    auto g = gram_matrix(states);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        if (i != j && !g[i][j].is_zero()) return "overlap " + std::to_string(i) + "," + std::to_string(j);
    return std::string();
  }));

  out.push_back(run_check("singlet table algebra k=3", [] {
    auto table = singlet_table(basis_states(3, BasisSource::Builtin));
    const std::size_t n = table.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& t = table[i][j];
        if (!equivalent(dagger(t), table[j][i])) return "dagger " + std::to_string(i) + std::to_string(j);
        if (!equivalent(multiply(t, dagger(t)), table[i][i])) return "T T^dagger " + std::to_string(i) + std::to_string(j);
        auto pp = multiply(table[i][i], table[j][j]);
        if (i == j ? !equivalent(pp, table[i][i]) : !pp.is_zero()) return "P P " + std::to_string(i) + std::to_string(j);
      }
    return std::string();
  }));

  out.push_back(run_check("singlet counts", [] {
    struct Row {
      int k, n, expect;
    };
    for (auto r : {Row{1, 1, 1}, Row{2, 1, 1}, Row{2, 2, 2}, Row{3, 1, 1}, Row{3, 2, 5}, Row{3, 3, 6}, Row{3, 4, 6}})
      for (auto src : {BasisSource::Builtin, BasisSource::Trace}) {
        int c = singlet_count(r.k, r.n, src);
        int o = numeric_state_rank(basis_states(r.k, src), r.n);
        if (c != r.expect || o != r.expect)
          return "k=" + std::to_string(r.k) + " N=" + std::to_string(r.n) + " got " + std::to_string(c) + "/" + std::to_string(o);
      }
    return std::string();
  }));

  out.push_back(run_check("loop factor in S_{2,1}", [] {
    auto sig = LegSignature::parse("qqb", Role::Operator);
    auto a = InvariantElement::primitive(sig, parse_cycles("(1 2 3)", 3));
    auto b = InvariantElement::primitive(sig, parse_cycles("(1 3 2)", 3));
    auto t = InvariantElement::primitive(sig, parse_cycles("(1 3)", 3));
    if (!(compose(a, b) == RadicalCoefficient(RationalFunction::N()) * t)) return "S_{2,1}: " + compose(a, b).to_string();
    if (!(compose(InvariantElement::permutation("(1 2)", 3), InvariantElement::permutation("(1 3 2)", 3)) ==
          InvariantElement::permutation("(1 3)", 3)))
      return std::string("(12)(132)");
    return std::string();
  }));

  out.push_back(run_check("epsilon LR projectors on (V, V*)", [] {
    for (int n : {3, 4}) {
      auto s = lr_singlet_projector(n);
      auto a = lr_adjoint_projector(n);
      if (!(s.projector == evaluate(RadicalCoefficient(RationalFunction(1) / RationalFunction::N()) * trace_pair(), n)))
        return "singlet N=" + std::to_string(n);
      if (!(a.projector == evaluate(adjoint_pair_diagram(), n))) return "adjoint N=" + std::to_string(n);
    }
    return std::string();
  }));

  out.push_back(run_check("baryon equivalence N=3", [seed] {
    auto r = verify_baryon_equivalence(3, 10, seed);
    return r.ok() ? std::string() : r.failure;
  }));

  out.push_back(run_check("LR dimension conservation", [] {
    for (int n : {3, 4})
      for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
        mpq_class total = lr_total_dimension(lr_decomposition(m, k, n), n);
        mpz_class expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), n, m + k);
        if (total != expect) return "m=" + std::to_string(m) + " n=" + std::to_string(k) + " N=" + std::to_string(n);
      }
    return std::string();
  }));

  out.push_back(run_check("transient projector traces", [] {
    for (int n : {2, 3})
      for (int m = 0; m <= 3; ++m)
        for (int k = 0; k <= 3; ++k)
          for (const auto& p : transient_singlet_params(m, k, n)) {
            if (4 * p.alpha * std::log(double(n)) > std::log(double(kDenseCap))) continue;
            if (tensor_trace(evaluate(transient_generic_projector(p, n), n)) != 1)
              return "m=" + std::to_string(m) + " n=" + std::to_string(k) + " N=" + std::to_string(n);
          }
    return std::string();
  }));

  out.push_back(run_check("group invariance of singlet states", [seed] {
    double worst = 0;
    for (int n : {2, 3})
      for (int k = 1; k <= 3; ++k)
        for (auto src : {BasisSource::Builtin, BasisSource::Trace})
          for (const auto& s : basis_states(k, src))
            for (int t = 0; t < 5; ++t) worst = std::max(worst, invariance_residual(s, sample_special_unitary(n, seed + t), n));
    return worst < 1e-10 ? std::string() : "residual " + std::to_string(worst);
  }));

  out.push_back(run_check("symbolic vs numeric traces and norms", [] {
    std::vector<InvariantElement> ops = builtin_orthogonal_basis(3);
    std::vector<InvariantElement> states = basis_states(3, BasisSource::Builtin);
    for (const auto& s : trace_basis_states(3)) states.push_back(s);
    for (int n = 2; n <= 5; ++n) {
      for (const auto& op : ops)
        if (!(trace(op).eval_at(n) == detail::numeric_trace(op, n))) return "trace at N=" + std::to_string(n);
      for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i; j < states.size(); ++j) {
          if (states[i].signature().size() != states[j].signature().size()) continue;
          auto sym = inner_product(states[i], states[j]);
          if (sym.has_pole_at(n)) continue;
          if (!(sym.eval_at(n) == detail::numeric_inner(states[i], states[j], n)))
            return "inner product " + std::to_string(i) + "," + std::to_string(j) + " at N=" + std::to_string(n);
        }
    }
    return std::string();
  }));

  out.push_back(run_check("composition homomorphism", [seed] {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 30; ++t) {
      auto pick = [&](int k) {
        auto perms = all_permutations(k);
        InvariantElement e(LegSignature::mixed(k, 0));
        for (int r = 0; r < 3; ++r) e.add_term(perms[rng() % perms.size()], RadicalCoefficient(mpq_class(long(rng() % 7) - 3) / 2));
        return e;
      };
      auto a = pick(3), b = pick(3);
      for (int n : {2, 3, 4})
        if (!(evaluate(compose(a, b), n) == matmul(evaluate(a, n), evaluate(b, n)))) return "pair " + std::to_string(t);
    }
    return std::string();
  }));

  out.push_back(run_check("Fierz identity with explicit generators", [] {
    for (int n : {2, 3, 4}) {
      auto gens = su_generators(n);
      double worst = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              std::complex<double> s = (i == j && k == l) ? 1.0 / n : 0.0;
              for (const auto& t : gens) s += t(i, j) * t(k, l);
              double target = (i == l && j == k) ? 1.0 : 0.0;
              worst = std::max(worst, std::abs(s - target));
            }
      if (worst > 1e-10) return "N=" + std::to_string(n);
    }
    return std::string();
  }));

  out.push_back(run_check("quadrupole coincidence limits are diagonal", [seed] {
    const int n = 3;
    std::vector<InvariantElement> states{bend(symmetrizer({0, 1}, 2)), bend(antisymmetrizer({0, 1}, 2))};
    for (int t = 0; t < 5; ++t) {
      auto x1 = sample_special_unitary(n, seed + 4 * t), x2 = sample_special_unitary(n, seed + 4 * t + 1);
      auto y1 = sample_special_unitary(n, seed + 4 * t + 2), y2 = sample_special_unitary(n, seed + 4 * t + 3);
      auto cx = correlator_matrix(states, {x1, x1, y2, y1}, n);
      auto cy = correlator_matrix(states, {x1, x2, y1, y1}, n);
      if (std::abs(cx(0, 1)) > 1e-10 || std::abs(cx(1, 0)) > 1e-10 || std::abs(cy(0, 1)) > 1e-10 || std::abs(cy(1, 0)) > 1e-10)
        return "sample " + std::to_string(t);
    }
    return std::string();
  }));

  out.push_back(run_check("JSON round trip", [] {
    auto table = singlet_table(basis_states(3, BasisSource::Builtin));
    for (const auto& row : table)
      for (const auto& s : row) {
        auto back = io::singlet_from_json(nlohmann::json::parse(io::to_json(s).dump()));
        if (!(back.ket == s.ket && back.bra == s.bra && back.normalization == s.normalization && back.labels == s.labels))
          return std::string("singlet operator");
      }
    auto t = evaluate(trace_basis_state(CycleDecomposition::parse("(1 2 3)", 3)), 2);
    if (!(io::tensor_from_json(nlohmann::json::parse(io::to_json(t).dump())) == t)) return std::string("tensor");
    return std::string();
  }));

  return out;
}

}  // namespace birdtrack
