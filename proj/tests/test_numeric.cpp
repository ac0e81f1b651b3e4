#include <gtest/gtest.h>

#include <random>

#include "birdtrack/numeric.hpp"
#include "birdtrack/symmetrizers.hpp"
#include "birdtrack/tracebasis.hpp"

using namespace birdtrack;

TEST(Numeric, DenseCap) {
  EXPECT_THROW(evaluate(InvariantElement::identity(LegSignature::mixed(4, 0)), 6), Error);
  EXPECT_NO_THROW(evaluate(InvariantElement::identity(LegSignature::mixed(3, 0)), 4));
}

TEST(Numeric, ExactRank) {
  EXPECT_EQ(exact_rank(RationalMatrix{{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(exact_rank(RationalMatrix{{mpq_class(1, 2), 1}, {1, mpq_class(1, 3)}}), 2);
  // Sym^2 projector on V^2 at N=3 has rank 6
  EXPECT_EQ(exact_rank(evaluate(symmetrizer({0, 1}, 2), 3), 2), 6);
}

TEST(Numeric, Homomorphism) {
  std::mt19937_64 rng(7);
  auto perms = all_permutations(3);
  for (int t = 0; t < 30; ++t) {
    InvariantElement a(LegSignature::mixed(3, 0)), b(LegSignature::mixed(3, 0));
    for (int r = 0; r < 3; ++r) {
      a.add_term(perms[rng() % 6], RadicalCoefficient(mpq_class(long(rng() % 9) - 4)));
      b.add_term(perms[rng() % 6], RadicalCoefficient(mpq_class(long(rng() % 9) - 4) / 3));
    }
    for (int n : {2, 3, 4}) EXPECT_EQ(evaluate(compose(a, b), n), matmul(evaluate(a, n), evaluate(b, n)));
  }
}

TEST(Numeric, SymbolicTracesAgree) {
  std::vector<InvariantElement> ops = builtin_orthogonal_basis(3);
  ops.erase(ops.begin() + 2, ops.begin() + 4);  // radical-weighted transitions are traceless anyway
  for (int n = 2; n <= 5; ++n) {
    for (const auto& op : ops) EXPECT_EQ(trace(op).eval_rational(n), tensor_trace(evaluate(op, n)));
    for (const auto& s : trace_basis_states(3)) {
      auto v = evaluate(s, n);
      EXPECT_EQ(inner_product(s, s).eval_rational(n), dot(v, v));
    }
  }
}

TEST(Unitary, Properties) {
  for (int n : {2, 3, 4}) {
    auto u = sample_special_unitary(n, 42);
    EXPECT_LT((u * u.adjoint() - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(std::abs(u.determinant() - 1.0), 1e-12);
    EXPECT_EQ(u, sample_special_unitary(n, 42));
    EXPECT_NE(u, sample_special_unitary(n, 43));
  }
}

TEST(Unitary, SingletStatesAreInvariant) {
  for (int n : {2, 3})
    for (int k = 1; k <= 3; ++k)
      for (const auto& s : trace_basis_states(k))
        for (std::uint64_t seed = 1; seed <= 5; ++seed) EXPECT_LT(invariance_residual(s, sample_special_unitary(n, seed), n), 1e-10);
  // A non-singlet vector is moved.
  auto sig = bend(InvariantElement::identity(LegSignature::mixed(1, 0))).signature();
  auto u = sample_special_unitary(3, 5);
  ComplexVector e = ComplexVector::Zero(9);
  e(1) = 1;
  EXPECT_GT((apply_group(e, sig, 3, {u, u}) - e).norm(), 1e-3);
}

TEST(Fierz, ExplicitGenerators) {
  for (int n : {2, 3, 4}) {
    auto gens = su_generators(n);
    ASSERT_EQ(static_cast<int>(gens.size()), n * n - 1);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      EXPECT_LT(std::abs(gens[a].trace()), 1e-12);
      EXPECT_LT((gens[a] - gens[a].adjoint()).cwiseAbs().maxCoeff(), 1e-12);
      for (std::size_t b = 0; b < gens.size(); ++b)
        EXPECT_NEAR(std::abs((gens[a] * gens[b]).trace()), a == b ? 1.0 : 0.0, 1e-12);
    }
    double worst = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            std::complex<double> s = (i == j && k == l) ? 1.0 / n : 0.0;
            for (const auto& t : gens) s += t(i, j) * t(k, l);
            worst = std::max(worst, std::abs(s - ((i == l && j == k) ? 1.0 : 0.0)));
          }
    EXPECT_LT(worst, 1e-10);
  }
}

namespace {
// Closed-form quadrupole entries for the symmetric (i=1) and antisymmetric (i=2) states.
std::complex<double> quadrupole(int i, int j, const ComplexMatrix& x1, const ComplexMatrix& x2, const ComplexMatrix& y1,
                                const ComplexMatrix& y2) {
  const double si = i == 1 ? 1 : -1, sj = j == 1 ? 1 : -1;
  auto tr = [](const ComplexMatrix& m) { return m.trace(); };
  return (tr(x1 * y2.adjoint()) * tr(x2 * y1.adjoint()) + sj * tr(x1 * y1.adjoint() * x2 * y2.adjoint()) +
          si * tr(x1 * y2.adjoint() * x2 * y1.adjoint()) + si * sj * tr(x1 * y1.adjoint()) * tr(x2 * y2.adjoint())) /
         4.0;
}
}  // namespace

TEST(Correlator, Dipole) {
  auto s = bend(InvariantElement::identity(LegSignature::mixed(1, 0)));
  auto u = sample_special_unitary(3, 9);
  auto c = correlator_matrix({s}, {u, u}, 3);
  EXPECT_NEAR(std::abs(c(0, 0) / 3.0 - 1.0), 0.0, 1e-12);
  auto v = sample_special_unitary(3, 10);
  auto d = correlator_matrix({s}, {u, v}, 3);
  EXPECT_NEAR(std::abs(d(0, 0) - (u * v.adjoint()).trace()), 0.0, 1e-12);
  EXPECT_THROW(correlator_matrix({s}, {u}, 3), Error);
}

TEST(Correlator, QuadrupoleClosedForm) {
  const int n = 3;
  std::vector<InvariantElement> states{bend(symmetrizer({0, 1}, 2)), bend(antisymmetrizer({0, 1}, 2))};
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto x1 = sample_special_unitary(n, 100 + s), x2 = sample_special_unitary(n, 200 + s);
    auto y1 = sample_special_unitary(n, 300 + s), y2 = sample_special_unitary(n, 400 + s);
    // the first antifundamental leg carries y2
    auto c = correlator_matrix(states, {x1, x2, y2, y1}, n);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) EXPECT_LT(std::abs(c(i - 1, j - 1) - quadrupole(i, j, x1, x2, y1, y2)), 1e-10);
    auto lx = correlator_matrix(states, {x1, x1, y2, y1}, n);
    EXPECT_LT(std::abs(lx(0, 1)), 1e-10);
    EXPECT_LT(std::abs(lx(1, 0)), 1e-10);
  }
}
