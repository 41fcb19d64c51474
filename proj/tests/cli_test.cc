// Copyright 2026 The twoxtwo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace twoxtwo::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const verify::Solvers& solvers = {}) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err, solvers);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("twoxtwo_cli_test_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliTest, AnalyzeAcceptsNegativeAndFractionalLiterals) {
  const Result r = run_cli({"analyze", "-1", "-3", "0", "-2", "-1", "0", "-3", "-2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("nash_components 1\nnash_box 0 0 0 0\n"), std::string::npos);

  const Result f = run_cli({"analyze", "-1/2", "-.5", "0.25", "+2", "1", "1", "1", "1"});
  EXPECT_EQ(f.code, kOk) << f.err;
  EXPECT_NE(f.out.find("game -1/2 -1/2 1/4 2 1 1 1 1\n"), std::string::npos);
}

TEST(CliTest, AnalyzeSpecExamples) {
  const Result zero = run_cli({"analyze", "0", "0", "0", "0", "0", "0", "0", "0"});
  EXPECT_NE(zero.out.find("nash_box 0 1 0 1\n"), std::string::npos);
  EXPECT_NE(zero.out.find("cce_dimension 3\ncce_vertices 4\n"), std::string::npos);
  const Result coord = run_cli({"analyze", "2", "0", "0", "1", "2", "0", "0", "1"});
  EXPECT_NE(coord.out.find("nash_components 3\n"), std::string::npos);
}

TEST(CliTest, UsageErrorsExitTwoAndNameTheToken) {
  Result r = run_cli({"analyze", "1", "2", "3"});
  EXPECT_EQ(r.code, kUsage);
  r = run_cli({"analyze", "1", "2", "3", "4", "5", "6", "7", "1e3"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("'1e3'"), std::string::npos);
  r = run_cli({"analyze", "1", "2", "3", "4", "5", "6", "7", "-1/-2"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("'-1/-2'"), std::string::npos);
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"render", "--kind", "pie", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"render", "--kind", "joint", "1/2", "1/2", "1/2", "0"}).code, kUsage);
  EXPECT_EQ(run_cli({"render", "--kind", "brgraph", "--format", "png", "0", "0", "0", "0", "0", "0",
                     "0", "0"})
                .code,
            kUsage);
  EXPECT_EQ(run_cli({"verify", "--trials", "0"}).code, kUsage);
  EXPECT_EQ(run_cli({"verify", "--trials", "-3"}).code, kUsage);
}

TEST(CliTest, HelpExitsZero) {
  const Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("render"), std::string::npos);
}

TEST(CliTest, CensusPrintsSixCounts) {
  const Result r = run_cli({"census"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "strict_ordinal_total 576\n"
            "strict_ordinal_up_to_strategy 144\n"
            "strict_ordinal_up_to_strategy_and_player 78\n"
            "partial_ordinal_classes 726\n"
            "br_graph_total 81\n"
            "br_classes 15\n");
}

TEST(CliTest, VerifyPassesAndIsDeterministic) {
  const Result r = run_cli({"verify", "--seed", "7", "--trials", "100"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "PASS 100/100\n");
  EXPECT_EQ(run_cli({"verify", "--seed", "7", "--trials", "100"}).out, r.out);
}

TEST(CliTest, VerifyCatchesMutatedConstraintSign) {
  verify::Solvers broken;
  broken.constraints = [](const Game& g) {
    auto c = cce_constraints(g);
    for (auto& x : c[2].coefficients) x = -x;
    return c;
  };
  const Result r = run_cli({"verify", "--seed", "7", "--trials", "100"}, broken);
  EXPECT_EQ(r.code, kFailure);
  EXPECT_NE(r.out.find("FAIL "), std::string::npos);
  const auto at = r.out.find("counterexample ");
  ASSERT_NE(at, std::string::npos);
  // The counterexample is a parseable flat 8-tuple.
  std::istringstream tuple(r.out.substr(at + 15));
  std::vector<Rational> flat;
  for (std::string t; flat.size() < 8 && tuple >> t;) flat.push_back(Rational::parse(t));
  EXPECT_EQ(flat.size(), 8u);
}

TEST(CliTest, VerifyCatchesBrokenNashSolver) {
  verify::Solvers broken;
  broken.nash = [](const Game& g) {
    NashSet n = nash_set(g);
    n.components.pop_back();
    if (n.components.empty()) n.components.push_back({0, 0, 1, 1});
    return n;
  };
  EXPECT_EQ(run_cli({"verify", "--trials", "20"}, broken).code, kFailure);
}

TEST(CliTest, RenderWritesByteIdenticalFiles) {
  const std::string a = temp_path("a.svg"), b = temp_path("b.svg");
  for (const auto& path : {a, b}) {
    const Result r = run_cli({"render", "--kind", "polytope", "--format", "svg", "2", "0", "0", "1",
                              "2", "0", "0", "1", "-o", path});
    ASSERT_EQ(r.code, kOk) << r.err;
  }
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a).find("<svg"), std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(CliTest, RenderMatchingPenniesCycleAsTikz) {
  const std::string path = temp_path("mp.tex");
  const Result r = run_cli({"render", "--kind", "brgraph", "--format", "tikz", "1", "-1", "-1", "1",
                            "-1", "1", "1", "-1", "-o", path});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::string text = slurp(path);
  EXPECT_NE(text.find("\\begin{tikzpicture}"), std::string::npos);
  std::size_t arrows = 0;
  for (auto at = text.find("-latex"); at != std::string::npos; at = text.find("-latex", at + 1)) {
    ++arrows;
  }
  EXPECT_EQ(arrows, 4u);
  std::filesystem::remove(path);
}

TEST(CliTest, FormatFollowsOutputSuffix) {
  const std::string path = temp_path("glyph.tex");
  ASSERT_EQ(
      run_cli({"render", "--kind", "jm", "1/100", "9/100", "9/100", "81/100", "-o", path}).code,
      kOk);
  EXPECT_NE(slurp(path).find("\\begin{tikzpicture}"), std::string::npos);
  std::filesystem::remove(path);
  const Result stdout_svg = run_cli({"render", "--kind", "jm", ".01", ".09", ".09", ".81"});
  EXPECT_NE(stdout_svg.out.find("<svg"), std::string::npos);
}

TEST(CliTest, RenderEmbeddingFromFiles) {
  const std::string pts = temp_path("pts.dat"), heat = temp_path("heat.dat"),
                    svg = temp_path("emb.svg");
  std::ofstream(pts) << "333.435 333.435\n45 200\n";
  std::ofstream(heat) << "1 2 3\n4 5 6\n";
  const Result r =
      run_cli({"render", "--kind", "embedding", "--points", pts, "--matrix", heat, "-o", svg});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::string text = slurp(svg);
  std::size_t points = 0, cells = 0;
  for (auto at = text.find("class=\"point\""); at != std::string::npos;
       at = text.find("class=\"point\"", at + 1)) {
    ++points;
  }
  for (auto at = text.find("class=\"heat-cell\""); at != std::string::npos;
       at = text.find("class=\"heat-cell\"", at + 1)) {
    ++cells;
  }
  EXPECT_EQ(points, 2u);
  EXPECT_EQ(cells, 6u);

  std::ofstream(heat) << "1 2 3\n4 5\n";
  EXPECT_EQ(run_cli({"render", "--kind", "embedding", "--matrix", heat}).code, kFailure);
  EXPECT_EQ(run_cli({"render", "--kind", "brgraph", "--points", pts, "0", "0", "0", "0", "0", "0",
                     "0", "0"})
                .code,
            kUsage);
  for (const auto& p : {pts, heat, svg}) std::filesystem::remove(p);
}

TEST(CliTest, StyleTogglesReachTheFigure) {
  const Result plain = run_cli({"render", "--kind", "embedding"});
  const Result bare = run_cli({"render", "--kind", "embedding", "--no-axes-labels",
                               "--no-tick-labels", "--no-best-response-names"});
  ASSERT_EQ(bare.code, kOk);
  EXPECT_NE(plain.out.find("br-name"), std::string::npos);
  EXPECT_EQ(bare.out.find("br-name"), std::string::npos);
  EXPECT_EQ(bare.out.find("tick-label"), std::string::npos);
  EXPECT_EQ(bare.out.find("axis-label"), std::string::npos);
}

TEST(CliTest, UnwritableOutputFails) {
  EXPECT_EQ(run_cli({"render", "--kind", "brgraph", "0", "0", "0", "0", "0", "0", "0", "0", "-o",
                     "/nonexistent-dir/x.svg"})
                .code,
            kFailure);
}

}  // namespace
}  // namespace twoxtwo::cli
