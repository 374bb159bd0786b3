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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "aoglab/error.hpp"
#include "aoglab/planarity.hpp"
#include "oracles.hpp"

namespace aoglab {
namespace {

std::vector<std::string> rendered(const std::vector<Word>& ws, int d) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(render(w, d));
  return out;
}

void expect_complete_bipartite(const BipartiteWitness& w) {
  std::set<std::string> distinct;
  for (const auto& u : rendered(w.left, w.params.d)) {
    distinct.insert(u);
    for (const auto& v : rendered(w.right, w.params.d)) {
      distinct.insert(v);
      EXPECT_TRUE(testing::naive_adjacent(u, v, w.params.s)) << u << " " << v;
    }
  }
  EXPECT_EQ(distinct.size(), w.left.size() + w.right.size());
}

// Face count by walking darts with a map, for cross-checking.
std::size_t faces_by_darts(const ExplicitGraph& g, const RotationSystem& rot) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> used;
  std::size_t faces = 0;
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    if (rot[u].empty()) {
      ++faces;
      continue;
    }
    for (auto v : rot[u]) {
      if (used[{u, v}]) continue;
      ++faces;
      std::uint32_t a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        const auto& around = rot[b];
        auto it = std::find(around.begin(), around.end(), a);
        std::size_t next = (static_cast<std::size_t>(it - around.begin()) + 1) %
                           around.size();
        a = b;
        b = around[next];
      }
    }
  }
  return faces;
}

TEST(Witness, K44ClassesForThreeTwoTwo) {
  const auto w = k44_witness(make_params(3, 2, 2));
  EXPECT_EQ(rendered(w.left, 2),
            (std::vector<std::string>{"bab", "bbb", "aba", "aaa"}));
  EXPECT_EQ(rendered(w.right, 2),
            (std::vector<std::string>{"bba", "baa", "aab", "abb"}));
  EXPECT_TRUE(verify_witness(w));
  expect_complete_bipartite(w);
}

TEST(Witness, K33FromFourTags) {
  const auto w = k33_witness(make_params(4, 2, 2));
  ASSERT_EQ(w.left.size(), 3u);
  EXPECT_TRUE(verify_witness(w));
  expect_complete_bipartite(w);
  EXPECT_THROW(k33_witness(make_params(3, 3, 2)), InvalidInput);
}

TEST(Witness, VerifierRejects) {
  auto w = k44_witness(make_params(3, 2, 2));
  std::swap(w.left[0], w.right[0]);
  EXPECT_FALSE(verify_witness(w));
  auto dup = k44_witness(make_params(3, 2, 2));
  dup.right[0] = dup.left[0];
  Verdict v = verify_witness(dup);
  EXPECT_FALSE(v);
  EXPECT_NE(v.reason().find("twice"), std::string::npos);
}

TEST(Classify, SmallCases) {
  for (auto [k, d, s] : {std::tuple{2, 2, 1}, {2, 3, 1}}) {
    const AOParams p = make_params(k, d, s);
    const auto v = classify_planarity(p);
    EXPECT_EQ(v.status, PlanarityStatus::kPlanar);
    ASSERT_TRUE(v.embedding.has_value());
    const ExplicitGraph g = materialize(p);
    EXPECT_TRUE(verify_embedding(g, *v.embedding));
    EXPECT_EQ(faces_by_darts(g, *v.embedding), count_faces(g, *v.embedding));
    EXPECT_EQ(static_cast<long long>(g.vertex_count()) -
                  static_cast<long long>(g.edge_count()) +
                  static_cast<long long>(faces_by_darts(g, *v.embedding)),
              2);
  }
  EXPECT_EQ(classify_planarity(make_params(3, 2, 2)).status,
            PlanarityStatus::kNonPlanar);
  EXPECT_EQ(classify_planarity(make_params(4, 2, 2)).witness->left.size(), 3u);
  EXPECT_EQ(classify_planarity(make_params(3, 2, 1)).status,
            PlanarityStatus::kUnknown);
  EXPECT_EQ(classify_planarity(make_params(3, 1, 1)).status,
            PlanarityStatus::kPlanar);
  EXPECT_EQ(to_string(PlanarityStatus::kNonPlanar), "nonplanar");
}

TEST(Embedding, RejectsNonPermutation) {
  const AOParams p = make_params(2, 2, 1);
  const ExplicitGraph g = materialize(p);
  auto rot = planar_fixture(p);
  rot[0].pop_back();
  EXPECT_FALSE(verify_embedding(g, rot));
}

// Property: for random rotation systems on the classified-nonplanar graphs
// no rotation passes the Euler check, and the face count always satisfies
// F <= E - V + 2 * components with matching parity.
TEST(PlanarityProperty, RandomRotationsRespectEulerBound) {
  std::mt19937_64 rng(11);
  for (auto [k, d, s] : {std::tuple{3, 2, 2}, {4, 2, 2}, {2, 2, 1}, {2, 3, 1}}) {
    const AOParams p = make_params(k, d, s);
    const ExplicitGraph g = materialize(p);
    const bool planar = classify_planarity(p).status == PlanarityStatus::kPlanar;
    for (int trial = 0; trial < 200; ++trial) {
      RotationSystem rot = g.adjacency();
      for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
      const std::size_t f = count_faces(g, rot);
      EXPECT_EQ(f, faces_by_darts(g, rot));
      const long long bound = static_cast<long long>(g.edge_count()) -
                              static_cast<long long>(g.vertex_count()) + 2;
      EXPECT_LE(static_cast<long long>(f), bound);
      EXPECT_EQ((bound - static_cast<long long>(f)) % 2, 0);
      if (!planar) EXPECT_FALSE(verify_embedding(g, rot));
    }
  }
}

// Property: K3,3 witnesses exist wherever there are four distinct tags.
TEST(PlanarityProperty, WitnessesAcrossParameters) {
  for (int k = 2; k <= 8; ++k) {
    for (int d = 2; d <= 4; ++d) {
      for (int s = 1; s < k; ++s) {
        const AOParams p = make_params(k, d, s);
        if (2 * p.t() > k) continue;
        if (checked_pow(d, p.t()).value() >= 4) {
          expect_complete_bipartite(k33_witness(p));
        } else if (k >= 3) {
          expect_complete_bipartite(k44_witness(p));
        }
      }
    }
  }
}

}  // namespace
}  // namespace aoglab
