// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "birdtrack/birdtrack.hpp"

using namespace birdtrack;

namespace {

const RationalFunction N = RationalFunction::N();
RadicalCoefficient R(const RationalFunction& r) { return RadicalCoefficient(r); }

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

// Dense (V, V*) operator tensors written out index by index.
ExactTensor pair_tensor(int n, mpq_class pair_weight, mpq_class id_weight) {
  ExactTensor t({n, n, n, n});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          mpq_class v = 0;
          if (a == b && c == d) v += pair_weight;
          if (a == c && b == d) v += id_weight;
          t.add({a, b, c, d}, v);
        }
  return t;
}

ExactReal numeric_inner(const InvariantElement& a, const InvariantElement& b, int n) {
  auto sa = split_radical(a), sb = split_radical(b);
  return (sa.scale * sb.scale).eval_at(n) * ExactReal(dot(evaluate(sa.rational, n), evaluate(sb.rational, n)));
}

ExactReal numeric_trace(const InvariantElement& a, int n) {
  auto s = split_radical(a);
  return s.scale.eval_at(n) * ExactReal(tensor_trace(evaluate(s.rational, n)));
}

Outcome chi_constants() {
  Outcome o;
  auto states = basis_states(3, BasisSource::Builtin);
  const std::vector<RationalFunction> expect{(N + 2) * (N + 1) * N / RationalFunction(6), N * (N * N - 1) / RationalFunction(3),
                                             N * (N * N - 1) / RationalFunction(3),       N * (N * N - 1) / RationalFunction(3),
                                             N * (N * N - 1) / RationalFunction(3),       (N - 2) * (N - 1) * N / RationalFunction(6)};
  for (std::size_t i = 0; i < 6; ++i) {
    auto g = inner_product(states[i], states[i]);
    o.require(g.is_rational() && g.rational_part() == expect[i], "norm " + std::to_string(i + 1) + " = " + g.to_string());
  }
  return o;
}

Outcome xi_constants() {
  Outcome o;
  auto states = orthogonal_trace_states(3);
  const std::vector<RationalFunction> expect{N * N * N,
                                             N * (N * N - 1),
                                             N * (N * N - 1),
                                             N * (N * N - 1),
                                             2 * N * (N * N - 1),
                                             2 * (N * N - 4) * (N * N - 1) / N};
  for (std::size_t i = 0; i < 6; ++i) {
    auto g = inner_product(states[i], states[i]);
    o.require(g == R(expect[i]), "norm " + std::to_string(i + 1) + " = " + g.to_string());
  }
  auto raw = trace_basis_states(3);
  auto off = inner_product(raw[4], raw[5]);
  const RationalFunction stated = -(N * N - 1) / N;
  o.require(off == R(stated), "<(123)|(132)> = " + off.to_string() + ", expected " + stated.to_string());
  return o;
}

Outcome operator_algebra() {
  Outcome o;
  auto table = singlet_table(basis_states(3, BasisSource::Builtin));
  std::vector<std::vector<InvariantElement>> ex(6, std::vector<InvariantElement>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) ex[i][j] = expand(table[i][j]);
  int kinds = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      kinds += table[i][j].kind == (i == j ? SingletOperator::Kind::Projector : SingletOperator::Kind::Transition);
      o.require(dagger(ex[i][j]) == ex[j][i], "T^dagger " + std::to_string(i + 1) + std::to_string(j + 1));
      o.require(compose(ex[i][j], dagger(ex[i][j])) == ex[i][i], "T T^dagger " + std::to_string(i + 1) + std::to_string(j + 1));
      auto pp = compose(ex[i][i], ex[j][j]);
      o.require(i == j ? pp == ex[i][i] : pp.is_zero(), "P P " + std::to_string(i + 1) + std::to_string(j + 1));
    }
  o.require(kinds == 36, "6 projectors and 30 transitions");
  return o;
}

Outcome singlet_counting() {
  Outcome o;
  struct Row {
    int k, n, expect;
  };
  std::vector<Row> rows{{1, 1, 1}, {1, 2, 1}, {1, 5, 1}, {2, 2, 2}, {2, 3, 2}, {2, 5, 2}, {3, 3, 6},
                        {3, 4, 6}, {3, 5, 6}, {3, 2, 5}, {3, 1, 1}, {2, 1, 1}};
  for (auto r : rows)
    for (auto src : {BasisSource::Builtin, BasisSource::Trace}) {
      int symbolic = singlet_count(r.k, r.n, src);
      int oracle = numeric_state_rank(basis_states(r.k, src), r.n);
      o.require(symbolic == r.expect && oracle == r.expect,
                "k=" + std::to_string(r.k) + " N=" + std::to_string(r.n) + ": " + std::to_string(symbolic) + "/" + std::to_string(oracle));
    }
  return o;
}

Outcome loop_factor() {
  Outcome o;
  auto sig = LegSignature::parse("qqb", Role::Operator);
  auto a = InvariantElement::primitive(sig, parse_cycles("(1 2 3)", 3));
  auto b = InvariantElement::primitive(sig, parse_cycles("(1 3 2)", 3));
  auto t = InvariantElement::primitive(sig, parse_cycles("(1 3)", 3));
  o.require(compose(a, b) == R(N) * t, "S_{2,1} product " + compose(a, b).to_string());
  o.require(compose(InvariantElement::permutation("(1 2)", 3), InvariantElement::permutation("(1 3 2)", 3)) ==
                InvariantElement::permutation("(1 3)", 3),
            "(12)(132)");
  return o;
}

Outcome lr_projectors() {
  Outcome o;
  for (int n : {3, 4}) {
    o.require(lr_singlet_projector(n).projector == pair_tensor(n, mpq_class(1, n), 0), "singlet N=" + std::to_string(n));
    o.require(lr_adjoint_projector(n).projector == pair_tensor(n, mpq_class(-1, n), 1), "adjoint N=" + std::to_string(n));
  }
  return o;
}

Outcome baryon() {
  Outcome o;
  auto r = verify_baryon_equivalence(3, 10, 1);
  o.require(r.main_path, "main path");
  o.require(r.untwisted, "untwisting variant");
  o.require(r.correlator, "correlator deviation " + std::to_string(r.max_correlator_deviation));
  return o;
}

Outcome pieri() {
  Outcome o;
  auto shapes = pieri_add_antifundamental(YoungShape::parse("[2,1]"), 4);
  std::vector<YoungShape> expect{YoungShape::parse("[3,2,1]"), YoungShape::parse("[3,1,1,1]"), YoungShape::parse("[2,2,1,1]")};
  o.require(shapes == expect, "[2,1] with a column of 3 at N=4");
  for (int n : {3, 4})
    for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), n, m + k);
      o.require(lr_total_dimension(lr_decomposition(m, k, n), n) == power,
                "dimensions m=" + std::to_string(m) + " n=" + std::to_string(k) + " N=" + std::to_string(n));
    }
  return o;
}

Outcome invariance() {
  Outcome o;
  double worst = 0;
  for (int n : {2, 3})
    for (int k = 1; k <= 3; ++k)
      for (auto src : {BasisSource::Builtin, BasisSource::Trace, BasisSource::TraceOrthogonalize})
        for (const auto& s : basis_states(k, src))
          for (std::uint64_t seed = 1; seed <= 5; ++seed)
            worst = std::max(worst, invariance_residual(s, sample_special_unitary(n, seed), n));
  o.require(worst < 1e-10, "residual " + std::to_string(worst));
  return o;
}

Outcome specialization() {
  Outcome o;
  auto ops = builtin_orthogonal_basis(3);
  std::vector<InvariantElement> states = basis_states(3, BasisSource::Builtin);
  for (const auto& s : trace_basis_states(3)) states.push_back(s);
  for (const auto& s : orthogonal_trace_states(3)) states.push_back(s);
  for (int n = 2; n <= 5; ++n) {
    for (std::size_t i = 0; i < ops.size(); ++i)
      o.require(trace(ops[i]).eval_at(n) == numeric_trace(ops[i], n), "trace " + std::to_string(i) + " N=" + std::to_string(n));
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = i; j < states.size(); ++j) {
        auto sym = inner_product(states[i], states[j]);
        o.require(sym.eval_at(n) == numeric_inner(states[i], states[j], n),
                  "<" + std::to_string(i) + "|" + std::to_string(j) + "> N=" + std::to_string(n));
      }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"builtin k=3 squared norms equal inverse chi constants", chi_constants},
      {"trace basis k=3 norms and cyclic overlap", xi_constants},
      {"singlet projector and transition algebra over Q(N)", operator_algebra},
      {"singlet counts by exact Gram rank with numeric oracle", singlet_counting},
      {"loop factors in mixed compositions", loop_factor},
      {"epsilon-built LR projectors on (V, V*) at N=3,4", lr_projectors},
      {"baryon equivalence at N=3", baryon},
      {"Pieri example and dimension conservation", pieri},
      {"group invariance of k<=3 singlet states", invariance},
      {"symbolic values agree with exact numeric tensors at N=2..5", specialization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::printf("criterion %zu: %s  %s%s%s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first, o.note.empty() ? "" : "  -- ",
                o.note.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed ? 1 : 0;
}
