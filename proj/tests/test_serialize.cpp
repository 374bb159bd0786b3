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

#include <random>

#include "aoglab/coloring.hpp"
#include "aoglab/domination.hpp"
#include "aoglab/error.hpp"
#include "aoglab/hamiltonian.hpp"
#include "aoglab/planarity.hpp"
#include "aoglab/serialize.hpp"
#include "oracles.hpp"

namespace aoglab {
namespace {

TEST(Serialize, CycleDocument) {
  const auto c = insertion_hamiltonian(make_params(3, 2, 1));
  const Json doc = to_json(c);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["kind"], "ao");
  EXPECT_EQ(doc["params"]["k"], 3);
  EXPECT_EQ(doc["cycle"][1], "aab");
  const auto back = cycle_from_json(parse_json(doc.dump()));
  EXPECT_EQ(back.vertices, c.vertices);
  EXPECT_EQ(std::get<AOParams>(back.graph), make_params(3, 2, 1));
  EXPECT_EQ(cycle_to_text(c).substr(0, 8), "aaa\naab\n");
}

TEST(Serialize, GridDocument) {
  const auto c = std::get<CycleCertificate>(grid_hamiltonian(make_grid_params(4, 2)));
  const Json doc = to_json(c);
  EXPECT_EQ(doc["kind"], "grid");
  EXPECT_EQ(doc["params"]["dim"], 2);
  EXPECT_EQ(doc["cycle"][0], "0,0");
  const auto back = cycle_from_json(doc);
  EXPECT_EQ(back.vertices, c.vertices);
  EXPECT_TRUE(verify_cycle(back));
}

TEST(Serialize, ColoringDocument) {
  const auto c = theorem3_coloring(make_params(2, 2, 1));
  const Json doc = to_json(c);
  EXPECT_EQ(doc["palette"], 3);
  EXPECT_EQ(doc["colors"].size(), 4u);
  const auto back = coloring_from_json(doc);
  EXPECT_EQ(back.colors, c.colors);
  EXPECT_TRUE(verify_coloring(back));

  Json partial = doc;
  partial["colors"].erase("bb");
  EXPECT_FALSE(verify_coloring(coloring_from_json(partial)));
}

TEST(Serialize, DominatingAndPlanarity) {
  const auto ds = dominating_set_construct(make_params(3, 2, 2));
  const auto back = dominating_set_from_json(to_json(ds));
  EXPECT_EQ(back.members, ds.members);

  for (auto p : {make_params(2, 3, 1), make_params(3, 2, 2), make_params(5, 2, 2)}) {
    const auto v = classify_planarity(p);
    const auto round = planarity_verdict_from_json(to_json(v));
    EXPECT_EQ(round.status, v.status);
    EXPECT_EQ(round.params, v.params);
    EXPECT_EQ(round.witness.has_value(), v.witness.has_value());
    if (v.witness) EXPECT_EQ(round.witness->left, v.witness->left);
    if (v.embedding) {
      EXPECT_EQ(round.embedding, v.embedding);
    }
  }
}

TEST(Serialize, ChromaticReport) {
  ChromaticReportOptions options;
  options.use_oracle = true;
  const Json doc = to_json(chromatic_report(make_params(3, 3, 2), options));
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["exact"], 6);
  EXPECT_EQ(doc["closed_form"], 6);
  EXPECT_EQ(doc["lower"], doc["upper"]);
  const Json bounds = to_json(chromatic_report(make_params(9, 2, 2)));
  EXPECT_TRUE(bounds["exact"].is_null() || bounds["lower"] == bounds["upper"]);
}

TEST(Serialize, MalformedInputs) {
  EXPECT_THROW(parse_json("{not json"), InvalidInput);
  EXPECT_THROW(cycle_from_json(parse_json(R"({"kind":"ao"})")), InvalidInput);
  EXPECT_THROW(
      cycle_from_json(parse_json(
          R"({"schema":2,"kind":"ao","params":{"k":2,"d":2,"s":1},"cycle":[]})")),
      InvalidInput);
  EXPECT_THROW(
      cycle_from_json(parse_json(
          R"({"schema":1,"kind":"ao","params":{"k":2,"d":2,"s":1},"cycle":["abc"]})")),
      InvalidInput);
  EXPECT_THROW(
      cycle_from_json(parse_json(
          R"({"schema":1,"kind":"ring","params":{"k":2,"d":2,"s":1},"cycle":[]})")),
      InvalidInput);
  EXPECT_THROW(params_from_json(parse_json(R"({"k":2,"d":2,"s":2})")), InvalidInput);
}

// Property: JSON round trips are lossless for random parameters.
TEST(SerializeProperty, RoundTrips) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    auto [k, d, s] = testing::draw_params(rng, 7, 4, 1000);
    const AOParams p = make_params(k, d, s);
    const auto c = insertion_hamiltonian(p);
    EXPECT_EQ(cycle_from_json(parse_json(to_json(c).dump())).vertices, c.vertices);
    const auto col = recursive_coloring(p);
    const auto back = coloring_from_json(parse_json(to_json(col).dump()));
    EXPECT_EQ(back.colors, col.colors);
    EXPECT_EQ(back.palette, col.palette);
    const ExplicitGraph g = materialize(p);
    EXPECT_EQ(graph_from_json(parse_json(to_json(g).dump())), g);
  }
}

}  // namespace
}  // namespace aoglab
