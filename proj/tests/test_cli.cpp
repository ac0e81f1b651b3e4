#include <gtest/gtest.h>

#include <sstream>

#include "birdtrack/cli.hpp"

using namespace birdtrack;
using cli::CommandConfig;
using cli::Format;
using nlohmann::json;

namespace {
struct Run {
  int status;
  std::string out, err;
};

Run run(CommandConfig c) {
  std::ostringstream o, e;
  int s = cli::run(c, o, e);
  return {s, o.str(), e.str()};
}

CommandConfig cfg(const std::string& cmd, Format f = Format::Json) {
  CommandConfig c;
  c.command = cmd;
  c.format = f;
  return c;
}
}  // namespace

TEST(Cli, SingletsBuiltinK3) {
  auto c = cfg("singlets");
  c.k = 3;
  auto r = run(c);
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "1");
  EXPECT_EQ(j["projectors"], 6);
  EXPECT_EQ(j["transitions"], 30);
  EXPECT_EQ(j["operators"].size(), 36u);
  auto op = io::singlet_from_json(j["operators"][7]);
  EXPECT_EQ(op.kind, SingletOperator::Kind::Projector);
}

TEST(Cli, SingletsLatexTable) {
  auto c = cfg("singlets", Format::Latex);
  c.k = 3;
  auto r = run(c);
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\\begin{tabular}{c|cccccc}"), std::string::npos);
  EXPECT_NE(r.out.find("P_{11}"), std::string::npos);
  EXPECT_NE(r.out.find("T_{23}"), std::string::npos);
  EXPECT_NE(r.out.find("\\sqrt{"), std::string::npos);
  EXPECT_NE(r.out.find("(1 2 3)"), std::string::npos);
}

TEST(Cli, TransientRecord) {
  auto c = cfg("transient");
  c.m = 3;
  c.n = 0;
  c.N = 3;
  auto r = run(c);
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["records"].size(), 1u);
  EXPECT_EQ(j["records"][0], json::parse(R"({"a":1,"b":0,"k":0,"alpha":2})"));
}

TEST(Cli, EvalCount) {
  auto c = cfg("eval");
  c.k = 2;
  c.N = 1;
  c.source = "trace";
  auto r = run(c);
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["singlet_count"], 1);
}

TEST(Cli, ConfigErrorsExitTwoWithJson) {
  auto c = cfg("eval");
  c.N = 3;  // missing --k
  auto r = run(c);
  EXPECT_EQ(r.status, 2);
  auto j = json::parse(r.err);
  EXPECT_EQ(j["error"]["kind"], "config");
  auto d = cfg("singlets");
  d.k = 3;
  d.source = "nope";
  EXPECT_EQ(run(d).status, 2);
  auto e = cfg("lr");
  e.m = 1;
  e.n = 1;
  e.N = 3;
  e.k = 2;
  EXPECT_EQ(run(e).status, 2);
  auto f = cfg("basis");
  f.k = 5;  // builtin stops at 3
  EXPECT_EQ(run(f).status, 2);
  EXPECT_EQ(run(cfg("frobnicate")).status, 2);
}

TEST(Cli, LrAndGramAndTraceBasis) {
  auto c = cfg("lr");
  c.m = 2;
  c.n = 1;
  c.N = 4;
  auto r = run(c);
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(json::parse(r.out)["conserved"].get<bool>());
  auto g = cfg("gram");
  g.k = 2;
  g.N = 3;
  g.source = "permutation";
  auto gj = json::parse(run(g).out);
  EXPECT_EQ(gj["specialized"], json::parse(R"([["9","3"],["3","9"]])"));
  auto t = cfg("trace-basis", Format::Text);
  t.k = 3;
  t.source = "trace+orthogonalize";
  auto tr = run(t);
  ASSERT_EQ(tr.status, 0);
  EXPECT_NE(tr.out.find("f\tnorm"), std::string::npos);
}

TEST(Cli, VerifyAndDeterminism) {
  auto v = cfg("verify", Format::Text);
  auto r = run(v);
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
  auto c = cfg("correlator");
  c.k = 2;
  c.N = 3;
  c.seed = 11;
  EXPECT_EQ(run(c).out, run(c).out);
  auto j = json::parse(run(c).out);
  EXPECT_EQ(j["matrix"].size(), 2u);
}
