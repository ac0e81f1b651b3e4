#include <gtest/gtest.h>

#include <map>

#include "birdtrack/numeric.hpp"

using namespace birdtrack;

namespace {

const RadicalCoefficient Nc{RationalFunction::N()};

// Independent oracle: the permutation operator of V^k at dimension n as a
// dense map out-multi-index -> in-multi-index, built from its action on basis vectors.
std::map<std::pair<std::vector<int>, std::vector<int>>, int> perm_operator(const Perm& rho, int n) {
  const int k = static_cast<int>(rho.size());
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> m;
  std::vector<int> in(k, 0);
  while (true) {
    std::vector<int> out(k);
    for (int b = 0; b < k; ++b) out[rho[b]] = in[b];
    m[{out, in}] = 1;
    int j = k - 1;
    while (j >= 0 && in[j] == n - 1) in[j--] = 0;
    if (j < 0) break;
    ++in[j];
  }
  return m;
}

bool matches_oracle(const ExactTensor& t, const Perm& rho, int n) {
  auto m = perm_operator(rho, n);
  if (t.entries().size() != m.size()) return false;
  const int k = static_cast<int>(rho.size());
  for (const auto& [idx, v] : m) {
    std::vector<int> full = idx.first;
    full.insert(full.end(), idx.second.begin(), idx.second.end());
    if (t.at(full) != v) return false;
  }
  return t.rank() == 2 * k;
}

}  // namespace

TEST(Signature, PortsAndRoles) {
  auto s = LegSignature::parse("qqb", Role::Operator);
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.num_ports(), 6);
  EXPECT_EQ(s.orientation_string(), "qqb");
  EXPECT_EQ(LegSignature::ket(2).orientation_string(), "qqbb");
  EXPECT_FALSE(LegSignature::parse("qqb", Role::Ket).balanced());
  EXPECT_THROW(LegSignature::parse("qx", Role::Operator), Error);
  EXPECT_THROW(InvariantElement::primitive(LegSignature::parse("qqb", Role::Ket), {0}), Error);
}

TEST(Diagram, EvaluationMatchesPermutationAction) {
  for (int n : {2, 3})
    for (const auto& p : all_permutations(3)) EXPECT_TRUE(matches_oracle(evaluate(InvariantElement::permutation(p), n), p, n));
}

TEST(Diagram, ComposeIsFunctionComposition) {
  auto a = InvariantElement::permutation("(1 2)", 3);
  auto b = InvariantElement::permutation("(1 3 2)", 3);
  EXPECT_EQ(compose(a, b), InvariantElement::permutation("(1 3)", 3));
  for (const auto& p : all_permutations(3))
    for (const auto& q : all_permutations(3))
      EXPECT_EQ(compose(InvariantElement::permutation(p), InvariantElement::permutation(q)), InvariantElement::permutation(multiply(p, q)));
}

TEST(Diagram, MixedCompositionClosesALoop) {
  auto sig = LegSignature::parse("qqb", Role::Operator);
  auto a = InvariantElement::primitive(sig, parse_cycles("(1 2 3)", 3));
  auto b = InvariantElement::primitive(sig, parse_cycles("(1 3 2)", 3));
  auto t = InvariantElement::primitive(sig, parse_cycles("(1 3)", 3));
  EXPECT_EQ(compose(a, b), Nc * t);
  for (int n : {2, 3, 4}) EXPECT_EQ(matmul(evaluate(a, n), evaluate(b, n)), evaluate(t, n).scaled(n));
}

TEST(Diagram, TraceCountsCycles) {
  EXPECT_EQ(trace(InvariantElement::identity(LegSignature::mixed(3, 0))), RadicalCoefficient(RationalFunction::N() * RationalFunction::N() * RationalFunction::N()));
  EXPECT_EQ(trace(InvariantElement::permutation("(1 2 3)", 3)), Nc);
  auto pair = InvariantElement::primitive(LegSignature::parse("qb", Role::Operator), {1, 0});
  EXPECT_EQ(trace(pair), Nc);
  for (int n : {2, 3}) EXPECT_EQ(tensor_trace(evaluate(pair, n)), n);
}

TEST(Diagram, DaggerAndInnerProduct) {
  auto c = InvariantElement::permutation("(1 2 3)", 3);
  EXPECT_EQ(dagger(c), InvariantElement::permutation("(1 3 2)", 3));
  EXPECT_EQ(dagger(dagger(c)), c);
  auto ket = bend(c);
  EXPECT_EQ(ket.signature().role(), Role::Ket);
  EXPECT_EQ(dagger(ket).signature().role(), Role::Bra);
  // <bend A | bend B> = Tr(A^dagger B)
  for (const auto& p : all_permutations(3))
    for (const auto& q : all_permutations(3)) {
      auto A = InvariantElement::permutation(p), B = InvariantElement::permutation(q);
      EXPECT_EQ(inner_product(bend(A), bend(B)), trace(compose(dagger(A), B)));
    }
}

TEST(Diagram, BendOrderAndNumericIsometry) {
  auto sig = LegSignature::parse("qb", Role::Operator);
  auto a = InvariantElement::primitive(sig, {1, 0});
  auto v = evaluate(bend(a), 3);
  EXPECT_EQ(dot(v, v), 9);
  EXPECT_EQ(bend(InvariantElement::identity(LegSignature::mixed(2, 0))).signature().orientation_string(), "qqbb");
}

TEST(Diagram, TensorAndRoles) {
  auto a = InvariantElement::permutation("(1 2)", 2);
  auto t = tensor(a, InvariantElement::identity(LegSignature::mixed(1, 0)));
  EXPECT_EQ(t, InvariantElement::permutation("(1 2)(3)", 3));
  EXPECT_THROW(tensor(a, bend(a)), Error);
  EXPECT_THROW(compose(a, InvariantElement::permutation("(1 2)", 3)), Error);
}

TEST(Diagram, PartialTraceAndApply) {
  // Tr_3 (1 2 3) = (1 2)
  EXPECT_EQ(partial_trace(InvariantElement::permutation("(1 2 3)", 3), {2}), InvariantElement::permutation("(1 2)", 2));
  EXPECT_EQ(partial_trace(InvariantElement::identity(LegSignature::mixed(2, 0)), {1}),
            Nc * InvariantElement::identity(LegSignature::mixed(1, 0)));
  auto rho = InvariantElement::permutation("(1 2)", 2);
  auto ket = bend(InvariantElement::identity(LegSignature::mixed(2, 0)));
  auto ops = LegSignature::mixed(2, 2);
  auto swap_q = embed(rho, {0, 1}, ops);
  EXPECT_EQ(apply(swap_q, ket), bend(rho));
}

TEST(Diagram, ReorderLegs) {
  auto c = InvariantElement::permutation("(1 2 3)", 3);
  auto r = reorder_legs(c, {1, 2, 0});
  for (int n : {2, 3}) EXPECT_EQ(evaluate(r, n), evaluate(c, n).permuted({1, 2, 0, 4, 5, 3}));
  std::vector<Orientation> wrong{Orientation::Antifundamental, Orientation::Fundamental, Orientation::Fundamental};
  EXPECT_THROW(reorder_legs(c, {1, 2, 0}, &wrong), Error);
  EXPECT_THROW(reorder_legs(c, {0, 0, 1}), Error);
}

TEST(Diagram, ContractionRejectsDanglingPorts) {
  Contraction c;
  c.add_piece(LegSignature::parse("qb", Role::Operator));
  c.set_linking(0, {0, 1});
  EXPECT_THROW(c.run(LegSignature::parse("qb", Role::Operator)), Error);
}
