#include <gtest/gtest.h>

#include "birdtrack/basis.hpp"
#include "birdtrack/json_io.hpp"

using namespace birdtrack;
using nlohmann::json;

namespace {
template <class T, class F>
T reparse(const T& v, F&& parse) {
  return parse(json::parse(io::to_json(v).dump()));
}
const RationalFunction N = RationalFunction::N();
}  // namespace

TEST(Json, PolynomialEncoding) {
  Polynomial p{mpq_class(-1, 2), 0, 3};
  EXPECT_EQ(io::to_json(p), json::parse(R"(["-1/2", "0", "3"])"));
  EXPECT_EQ(reparse(p, io::polynomial_from_json), p);
  EXPECT_THROW(io::polynomial_from_json(json::parse(R"(["1/0"])")), Error);
  EXPECT_THROW(io::polynomial_from_json(json::parse(R"(["x"])")), Error);
}

TEST(Json, RadicalCoefficient) {
  auto c = RadicalCoefficient(N / (N + 1)) + RadicalCoefficient::sqrt(N * N - 1);
  auto j = io::to_json(c);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[0].contains("radicand"));
  EXPECT_TRUE(j[0].contains("multiplier"));
  EXPECT_EQ(reparse(c, io::radical_from_json), c);
}

TEST(Json, ElementAndSingletRoundTrip) {
  for (const auto& s : basis_states(3, BasisSource::Builtin)) {
    EXPECT_EQ(reparse(s, io::element_from_json), s);
    auto j = io::to_json(s);
    EXPECT_EQ(j["signature"]["orientations"], "qqqbbb");
    EXPECT_EQ(j["signature"]["role"], "ket");
  }
  auto e = InvariantElement::permutation("(1 2 3)", 3);
  EXPECT_EQ(io::to_json(e)["terms"][0]["perm"], json::parse("[2, 3, 1]"));
  auto table = singlet_table(basis_states(2, BasisSource::Builtin));
  for (const auto& row : table)
    for (const auto& op : row) {
      auto back = reparse(op, io::singlet_from_json);
      EXPECT_EQ(back.kind, op.kind);
      EXPECT_EQ(back.labels, op.labels);
      EXPECT_EQ(back.normalization, op.normalization);
      EXPECT_EQ(back.ket, op.ket);
      EXPECT_EQ(back.bra, op.bra);
    }
}

TEST(Json, TensorsMatricesShapes) {
  auto t = evaluate(antisymmetrizer({0, 1}, 2), 3);
  EXPECT_EQ(reparse(t, io::tensor_from_json), t);
  EXPECT_EQ(io::to_json(t)["entries"][0][1].get<std::string>().find('/') != std::string::npos, true);
  auto u = sample_special_unitary(3, 1);
  EXPECT_EQ(reparse(u, io::complex_matrix_from_json), u);
  auto s = YoungShape::parse("[3,1,1]");
  EXPECT_EQ(reparse(s, io::shape_from_json), s);
  TransientParams p{1, 0, 0, 2};
  EXPECT_EQ(reparse(p, io::transient_from_json), p);
  EXPECT_THROW(io::tensor_from_json(json::parse(R"({"shape":[2],"entries":[[[5],"1"]]})")), Error);
}

TEST(Json, SchemaVersion) {
  auto v = io::versioned({{"x", 1}});
  EXPECT_EQ(v["schema"], "1");
  EXPECT_NO_THROW(io::check_schema(v));
  EXPECT_THROW(io::check_schema(json::parse(R"({"schema":"2"})")), Error);
}
