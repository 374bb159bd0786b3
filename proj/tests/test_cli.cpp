// Copyright 2026 The aoglab Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aoglab/cli.hpp"
#include "aoglab/serialize.hpp"

namespace aoglab {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("aoglab_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

TEST(Cli, BuildFormats) {
  auto r = run_cli({"build", "--k", "2", "--d", "2", "--s", "1", "--format", "edges"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "aa ab\naa ba\nab ba\nab bb\nba bb\n");
  r = run_cli({"build", "--k", "3", "--d", "2", "--s", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_json(r.out)["edges"].size(), 13u);
  r = run_cli({"build", "--k", "2", "--d", "2", "--s", "1", "--format", "dot"});
  EXPECT_EQ(r.out.rfind("graph G {", 0), 0u);
}

TEST(Cli, HamiltonOutputs) {
  auto r = run_cli({"hamilton", "--k", "3", "--d", "2", "--s", "1", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "aaa\naab\nabb\nbbb\nbba\nbab\naba\nbaa\n");
  r = run_cli({"hamilton", "--k", "3", "--d", "2", "--s", "1", "--format", "sequence"});
  EXPECT_EQ(r.out, "aaabbbab\n");
  r = run_cli({"hamilton", "--k", "4", "--d", "2", "--s", "3", "--method", "eulerian"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, GridRefusalExitsOne) {
  auto r = run_cli({"grid-ham", "--d", "3", "--dim", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(parse_json(r.out).contains("refusal"));
  r = run_cli({"grid-ham", "--d", "4", "--dim", "2", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 8), "0,0\n1,0\n");
}

TEST(Cli, ColorAndChromatic) {
  auto r = run_cli({"color", "--k", "5", "--d", "2", "--s", "2", "--method", "recursive"});
  EXPECT_EQ(r.code, 0);
  const Json doc = parse_json(r.out);
  EXPECT_EQ(doc["palette"], 5);
  std::uint64_t total = 0;
  for (const auto& n : doc["class_sizes"]) total += n.get<std::uint64_t>();
  EXPECT_EQ(total, 32u);

  r = run_cli({"color", "--k", "3", "--d", "2", "--s", "2", "--method", "oracle"});
  EXPECT_EQ(parse_json(r.out)["palette"], 4);

  r = run_cli({"chromatic", "--k", "5", "--d", "2", "--s", "2"});
  EXPECT_EQ(parse_json(r.out)["upper"], 5);
  EXPECT_TRUE(parse_json(r.out)["exact"].is_null());
  r = run_cli({"chromatic", "--k", "5", "--d", "2", "--s", "2", "--oracle"});
  EXPECT_EQ(parse_json(r.out)["oracle"], 4);
  r = run_cli({"chromatic", "--k", "7", "--d", "2", "--s", "3", "--oracle"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, DominateAndPlanarity) {
  auto r = run_cli({"dominate", "--k", "4", "--d", "2", "--s", "2", "--oracle"});
  EXPECT_EQ(r.code, 0);
  const Json doc = parse_json(r.out);
  EXPECT_EQ(doc["size"], 4);
  EXPECT_EQ(doc["oracle"]["domination_number"], 3);
  r = run_cli({"planarity", "--k", "3", "--d", "2", "--s", "2"});
  EXPECT_EQ(parse_json(r.out)["status"], "nonplanar");
}

TEST(Cli, VerifyRoundTripAndRejection) {
  const std::string path = temp_path("cycle.json");
  auto r = run_cli({"--out", path, "hamilton", "--k", "4", "--d", "3", "--s", "2"});
  ASSERT_EQ(r.code, 0);
  r = run_cli({"verify", "cycle", "--input", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_json(r.out)["accepted"], true);

  write_file(path,
             R"({"schema":1,"kind":"ao","params":{"k":2,"d":2,"s":1},)"
             R"("cycle":["aa","bb","ab","ba"]})");
  r = run_cli({"verify", "cycle", "--input", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(parse_json(r.out)["reason"].get<std::string>().empty());

  write_file(path, "{oops");
  EXPECT_EQ(run_cli({"verify", "cycle", "--input", path}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyWitnessAndColoring) {
  const std::string path = temp_path("doc.json");
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"witness", {"planarity", "--k", "2", "--d", "3", "--s", "1"}},
      {"witness", {"planarity", "--k", "4", "--d", "2", "--s", "2"}},
      {"coloring", {"color", "--k", "4", "--d", "2", "--s", "2"}},
      {"coloring", {"color", "--k", "5", "--d", "2", "--s", "2", "--method", "oracle"}},
      {"dominating", {"dominate", "--k", "4", "--d", "2", "--s", "2", "--oracle"}},
  };
  for (const auto& [kind, command] : cases) {
    std::vector<std::string> make{"--out", path};
    make.insert(make.end(), command.begin(), command.end());
    ASSERT_EQ(run_cli(make).code, 0);
    auto r = run_cli({"verify", kind, "--input", path});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
  }
  std::filesystem::remove(path);
}

TEST(Cli, InvalidArgumentsAndGuards) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"build", "--k", "2"}).code, 2);
  EXPECT_EQ(run_cli({"build", "--k", "2", "--d", "2", "--s", "2"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({"build", "--k", "21", "--d", "2", "--s", "1"}).code, 3);

  ::setenv("AOGLAB_MAX_VERTICES", "8", 1);
  EXPECT_EQ(run_cli({"build", "--k", "4", "--d", "2", "--s", "1"}).code, 3);
  auto forced = run_cli({"--force", "build", "--k", "4", "--d", "2", "--s", "1"});
  EXPECT_EQ(forced.code, 0);
  EXPECT_NE(forced.err.find("warning"), std::string::npos);
  ::setenv("AOGLAB_MAX_VERTICES", "lots", 1);
  EXPECT_EQ(run_cli({"build", "--k", "2", "--d", "2", "--s", "1"}).code, 2);
  ::unsetenv("AOGLAB_MAX_VERTICES");
}

}  // namespace
}  // namespace aoglab
