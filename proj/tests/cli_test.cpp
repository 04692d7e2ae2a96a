// Copyright 2026 The mwr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mwr/cli.hpp"
#include "mwr/generators.hpp"
#include "mwr/io.hpp"

namespace mwr {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mwr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, SolveJsonOnCompleteGraph) {
  const auto path = write_file("k4.graph", serialize_graph(gen_complete(4)));
  const auto r = run_cli({"solve", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["ratio"]["num"], 1);
  EXPECT_EQ(doc["ratio"]["den"], 2);
  EXPECT_EQ(doc["subset"], nlohmann::json::parse("[1,2,3,4]"));
  EXPECT_NO_THROW(validate_solution_json(gen_complete(4), doc));
}

TEST(Cli, SolveMethods) {
  const auto path = write_file("c6.graph", serialize_graph(gen_cycle(6)));
  for (const std::string method : {"auto", "flow", "brute", "brute-weightings"}) {
    const auto r = run_cli({"solve", path, "--method", method});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("ratio 5/6"), std::string::npos) << r.out;
  }
  EXPECT_EQ(run_cli({"solve", path, "--method", "magic"}).code, 2);
}

TEST(Cli, RatioOnWeightedTree) {
  const auto path = write_file("tree.graph", "p 4 3\ne 1 2 3\ne 2 3 1/2\ne 2 4 0.25\n");
  const auto r = run_cli({"ratio", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("t_w 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("u 1\n"), std::string::npos) << r.out;
}

TEST(Cli, Mst) {
  const auto weighted = write_file("tri_w.graph", "p 3 3\ne 1 2 1\ne 1 3 1\ne 2 3 0\n");
  const auto r = run_cli({"mst", weighted});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("weight 2"), std::string::npos);
  EXPECT_NE(r.out.find("e 1-2 1"), std::string::npos);
  const auto plain = write_file("tri.graph", "p 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  EXPECT_EQ(run_cli({"mst", plain}).code, 2);
}

TEST(Cli, Chordal) {
  const auto path = write_file("tp.graph", "p 4 4\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n");
  const auto r = run_cli({"chordal", path, "--clique-tree", "--verify-optimum"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("chordal yes"), std::string::npos);
  EXPECT_NE(r.out.find("{3 4} -- {1 2 3}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("report ok"), std::string::npos);
  const auto c4 = write_file("c4.graph", serialize_graph(gen_cycle(4)));
  const auto nc = run_cli({"chordal", c4});
  EXPECT_EQ(nc.code, 0);
  EXPECT_NE(nc.out.find("chordal no"), std::string::npos);
  EXPECT_EQ(run_cli({"chordal", c4, "--clique-tree"}).code, 2);
}

TEST(Cli, GenIsDeterministicAndParses) {
  const auto a = run_cli({"gen", "random-connected", "--n", "20", "--m", "40", "--seed", "5"});
  const auto b = run_cli({"gen", "random-connected", "--n", "20", "--m", "40", "--seed", "5"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed 5"), std::string::npos);
  EXPECT_EQ(parse_graph_string(a.out).graph, gen_random_connected(20, 40, 5));

  const auto file = (std::filesystem::path(::testing::TempDir()) / "gap.graph").string();
  ASSERT_EQ(run_cli({"gen", "gap", "--kappa", "4", "--t", "3", "--seed", "1", "-o", file}).code, 0);
  std::ifstream in(file);
  const auto pg = parse_graph(in);
  EXPECT_TRUE(pg.weights.has_value());
  EXPECT_EQ(pg.graph.num_vertices(), 7);

  EXPECT_EQ(run_cli({"gen", "petersen"}).code, 2);
  EXPECT_EQ(run_cli({"gen", "random-connected", "--n", "4", "--m", "9"}).code, 2);
}

TEST(Cli, Verify) {
  const auto r = run_cli({"verify", "corollary-complete"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("passed 10, failed 0"), std::string::npos);
  const auto a = run_cli({"verify", "lemma4", "--seed", "9", "--trials", "50"});
  const auto b = run_cli({"verify", "lemma4", "--seed", "9", "--trials", "50"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run_cli({"verify", "theorem9"}).code, 2);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"solve"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "/nonexistent/file.graph"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  const auto k1 = write_file("k1.graph", "p 1 0\n");
  const auto r = run_cli({"solve", k1});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DegenerateGraph"), std::string::npos) << r.err;
  const auto split = write_file("split.graph", "p 4 2\ne 1 2\ne 3 4\n");
  const auto s = run_cli({"solve", split});
  EXPECT_EQ(s.code, 2);
  EXPECT_NE(s.err.find("NotConnected"), std::string::npos) << s.err;
  const auto bad = write_file("bad.graph", "p 3 3\ne 1 2\ne 1 3\ne 1 4\n");
  EXPECT_NE(run_cli({"solve", bad}).err.find("OutOfRange"), std::string::npos);
}

}  // namespace
}  // namespace mwr
