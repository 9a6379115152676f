#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "lich/cli.hpp"

using namespace lich;

namespace {

std::string data(const char* name) { return std::string(LICH_DATA_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
  bool has(const std::string& s) const { return out.find(s) != std::string::npos; }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Check) {
  const Result ok = run({"check", data("acfm.alg")});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_TRUE(ok.has("unimodular: true"));
  EXPECT_TRUE(ok.has("brackets: [[X1, X2] = -1 X4, [X1, X3] = 1 X1, [X2, X3] = -1 X2]"));
  EXPECT_TRUE(ok.err.empty());

  const Result undeclared = run({"check", data("undeclared.alg")});
  EXPECT_EQ(undeclared.code, kExitInput);
  EXPECT_TRUE(undeclared.out.empty());
  EXPECT_NE(undeclared.err.find("SyntaxError: line 2, column 12"), std::string::npos);

  const Result bad = run({"check", data("nonjacobi.alg")});
  EXPECT_EQ(bad.code, kExitMath);
  EXPECT_TRUE(bad.has("generator: beta"));
  EXPECT_TRUE(bad.has("residual: -2 alpha^gamma^eta"));
  EXPECT_TRUE(bad.has("triple: [X1, X3, X4]"));

  EXPECT_EQ(run({"check", data("missing.alg")}).code, kExitInput);
  EXPECT_EQ(run({}).code, kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInput);
}

TEST(Cli, Cohomology) {
  const Result twisted = run({"cohomology", data("acfm.alg"), "--omega", "-1 gamma"});
  EXPECT_EQ(twisted.code, kExitOk);
  EXPECT_TRUE(twisted.has("complex: invariant-complex"));
  EXPECT_TRUE(twisted.has("dims: [0, 1, 2, 1, 0]"));
  EXPECT_TRUE(twisted.has("harmonic_basis: [1 alpha^gamma, 1 alpha^eta]"));
  EXPECT_TRUE(run({"cohomology", data("torus4.alg")}).has("dims: [1, 4, 6, 4, 1]"));
  EXPECT_TRUE(run({"cohomology", data("acfm.alg")}).has("dims: [1, 1, 0, 1, 1]"));

  const Result not_closed = run({"cohomology", data("acfm.alg"), "--omega", "alpha"});
  EXPECT_EQ(not_closed.code, kExitMath);
  EXPECT_NE(not_closed.err.find("OmegaNotClosed"), std::string::npos);
  EXPECT_EQ(run({"cohomology", data("acfm.alg"), "--omega", "alpha^beta"}).code, kExitInput);
  EXPECT_EQ(run({"cohomology", data("acfm_params.alg")}).code, kExitInput);
  EXPECT_EQ(run({"cohomology", data("nonjacobi.alg")}).code, kExitMath);
}

TEST(Cli, Lcs) {
  const Result t = run({"lcs", data("acfm.alg"), "--form", "2 alpha^eta + beta^gamma"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_TRUE(t.has("lee_form: -1 gamma"));
  EXPECT_TRUE(t.has("verdict: Lee form -1 gamma; class NOT exact; l = 0 on automorphisms"));
  EXPECT_TRUE(t.has("coordinates: [0, 2]"));

  const Result e = run({"lcs", data("acfm.alg"), "--form", "alpha^beta - gamma^eta"});
  EXPECT_EQ(e.code, kExitOk);
  EXPECT_TRUE(e.has("primitive: 1 eta"));
  EXPECT_TRUE(e.has("automorphism_from_primitive:\n    field: -1 X3\n    mu: 0\n    l: 1"));
  EXPECT_TRUE(e.has("exactness_via_lee_consistent: true"));

  const Result degenerate = run({"lcs", data("acfm.alg"), "--form", "alpha^eta + beta^gamma + alpha^beta - gamma^eta"});
  EXPECT_EQ(degenerate.code, kExitMath);
  EXPECT_NE(degenerate.err.find("Degenerate: top-power coefficient is 0"), std::string::npos);
  EXPECT_EQ(run({"lcs", data("acfm.alg"), "--form", "alpha"}).code, kExitInput);
  EXPECT_EQ(run({"lcs", data("acfm.alg"), "--form", "alpha^^beta"}).code, kExitInput);
}

TEST(Cli, Acfm) {
  const Result pf = run({"acfm", "--param-mode", "--pfaffian-t", "--pfaffian-s"});
  EXPECT_EQ(pf.code, kExitOk);
  EXPECT_TRUE(pf.has("top_power_t: 2*(t1*t2 - n*k*lambda*t3^2)"));
  EXPECT_TRUE(pf.has("top_power_s: -2*(s1*s2 - n*k*lambda*s3^2)"));
  EXPECT_TRUE(pf.has("[X, Y] = (-n*lambda) T"));
  EXPECT_EQ(run({"acfm", "--param-mode", "--prop1"}).code, kExitInput);
  EXPECT_EQ(run({"acfm", "--param-mode", "--n", "2"}).code, kExitInput);
  EXPECT_EQ(run({"acfm", "--n", "0", "--theorem1"}).code, kExitInput);
  EXPECT_EQ(run({"acfm", "--n", "1/2"}).code, kExitInput);
  EXPECT_EQ(run({"acfm", "--k", "0"}).code, kExitInput);

  const Result all = run({"acfm", "--n", "2", "--k", "1/2", "--lambda", "3", "--theorem1", "--prop1", "--cohomology",
                       "--exact", "--lck", "--section4"});
  EXPECT_EQ(all.code, kExitOk);
  EXPECT_TRUE(all.has("holds_on_sample: true"));
  EXPECT_FALSE(all.has("lee_matches: false"));
}

TEST(Cli, Moser) {
  const Result grid = run({"moser", "--preset", "grid"});
  EXPECT_EQ(grid.code, kExitOk);
  EXPECT_TRUE(grid.has("verdict: pass"));
  const Result crossing = run({"moser", "--preset", "crossing"});
  EXPECT_EQ(crossing.code, kExitMath);
  EXPECT_TRUE(crossing.has("index: 2\n    hypothesis: locally conformal symplectic\n    error: Degenerate"));
  const Result members =
      run({"moser", data("acfm.alg"), "--member", "2 alpha^eta + beta^gamma", "--member", "3 alpha^eta + beta^gamma"});
  EXPECT_EQ(members.code, kExitMath);
  EXPECT_TRUE(members.has("hypothesis: d_omega-exact difference"));
  EXPECT_EQ(run({"moser"}).code, kExitInput);
  EXPECT_EQ(run({"moser", "--preset", "spiral"}).code, kExitInput);
}

TEST(Cli, JsonIsExact) {
  const Result j = run({"--json", "cohomology", data("acfm.alg"), "--omega", "-1 gamma"});
  ASSERT_EQ(j.code, kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["command"], "cohomology");
  EXPECT_EQ(doc["report"]["omega"], "-1 gamma");
  EXPECT_EQ(doc["report"]["dims"], nlohmann::json({0, 1, 2, 1, 0}));
  const Result l = run({"--json", "lcs", data("acfm.alg"), "--form", "2 alpha^eta + beta^gamma"});
  EXPECT_EQ(nlohmann::json::parse(l.out)["report"]["top_power_coefficient"], "4");
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"check", data("acfm.alg")},
      {"check", data("nonjacobi.alg")},
      {"cohomology", data("acfm.alg"), "--omega", "-1 gamma"},
      {"lcs", data("acfm.alg"), "--form", "alpha^beta - gamma^eta"},
      {"acfm", "--theorem1", "--section4", "--prop1"},
      {"moser", "--preset", "crossing"},
      {"--json", "acfm", "--cohomology"},
  };
  for (const auto& c : commands) {
    const Result a = run(c), b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
}
