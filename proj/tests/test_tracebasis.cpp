#include <gtest/gtest.h>

#include "birdtrack/numeric.hpp"
#include "birdtrack/tracebasis.hpp"

using namespace birdtrack;

namespace {
const RationalFunction N = RationalFunction::N();
RadicalCoefficient R(const RationalFunction& r) { return RadicalCoefficient(r); }
}  // namespace

TEST(TraceBasis, CycleDecomposition) {
  auto c = CycleDecomposition::parse("(1 2)(3 4)");
  EXPECT_TRUE(c.is_derangement());
  EXPECT_EQ(c.cycles().size(), 2u);
  EXPECT_FALSE(CycleDecomposition::parse("(1 2)(3)").is_derangement());
  EXPECT_EQ(c.to_string(), "(1 2)(3 4)");
}

TEST(TraceBasis, Order) {
  auto order = trace_basis_order(3);
  std::vector<std::string> names;
  for (const auto& p : order) names.push_back(format_cycles(p));
  EXPECT_EQ(names, (std::vector<std::string>{"(1)(2)(3)", "(1)(2 3)", "(1 2)(3)", "(1 3)(2)", "(1 2 3)", "(1 3 2)"}));
}

TEST(TraceBasis, FierzPieces) {
  auto adj = adjoint_pair_diagram();
  EXPECT_EQ(compose(adj, adj), adj);
  EXPECT_EQ(trace(adj), R(N * N - 1));
  EXPECT_TRUE(compose(adj, trace_pair()).is_zero());
}

TEST(TraceBasis, GramMatrixK3) {
  auto g = gram_matrix(trace_basis_states(3));
  EXPECT_EQ(g[0][0], R(N * N * N));
  for (int i : {1, 2, 3}) EXPECT_EQ(g[i][i], R(N * N * N - N));
  const RationalFunction cyc = (N * N * N * N - 3 * N * N + 2) / N;
  EXPECT_EQ(g[4][4], R(cyc));
  EXPECT_EQ(g[5][5], R(cyc));
  EXPECT_EQ(g[4][5], R((-2 * N * N + 2) / N));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) EXPECT_TRUE(g[i][j].is_zero()) << i << "," << j;
}

TEST(TraceBasis, DAndFCombinations) {
  auto [d, f] = df_states();
  EXPECT_EQ(inner_product(d, d), R(2 * (N * N - 4) * (N * N - 1) / N));
  EXPECT_EQ(inner_product(f, f), R(2 * N * (N * N - 1)));
  EXPECT_TRUE(inner_product(d, f).is_zero());
  // d vanishes at N = 2
  EXPECT_TRUE(evaluate(d, 2).entries().empty());
}

TEST(TraceBasis, K2States) {
  auto g = gram_matrix(trace_basis_states(2));
  EXPECT_EQ(g[0][0], R(N * N));
  EXPECT_EQ(g[1][1], R(N * N - 1));
  EXPECT_TRUE(g[0][1].is_zero());
}

TEST(TraceBasis, OrthogonalSetsAndDerangements) {
  auto k3 = orthogonal_trace_states(3);
  ASSERT_EQ(k3.size(), 6u);
  auto g = gram_matrix(k3);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) EXPECT_TRUE(g[i][j].is_zero());
  EXPECT_EQ(derangement_states(3).size(), 2u);
  EXPECT_EQ(derangement_states(4).size(), 9u);
  EXPECT_EQ(normalized_trace_basis(2).size(), 2u);
}

TEST(TraceBasis, StatesAreTracelessPerCycle) {
  // Contracting one leg pair of a nontrivial cycle annihilates the state.
  auto s = trace_basis_state(CycleDecomposition::parse("(1 2)(3)", 3));
  auto v = evaluate(s, 3);
  mpq_class total = 0;
  for (const auto& [f, val] : v.entries()) {
    auto idx = v.unflat(f);
    if (idx[0] == idx[3] && idx[1] == 0 && idx[2] == 0 && idx[4] == 1 && idx[5] == 0) total += val;
  }
  EXPECT_EQ(total, 0);
}

TEST(TraceBasis, SpansPermutationStates) {
  for (int k : {2, 3}) {
    auto states = trace_basis_states(k);
    for (const auto& p : trace_basis_order(k)) states.push_back(bend(InvariantElement::permutation(p)));
    RationalMatrix rows;
    for (const auto& s : states) {
      auto t = evaluate(s, 4);
      std::vector<mpq_class> r(t.volume(), mpq_class(0));
      for (const auto& [f, v] : t.entries()) r[f] = v;
      rows.push_back(r);
    }
    EXPECT_EQ(exact_rank(rows), factorial(k));
  }
}
