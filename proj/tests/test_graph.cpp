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

#include "aoglab/error.hpp"
#include "aoglab/graph.hpp"
#include "oracles.hpp"

namespace aoglab {
namespace {

using testing::naive_adjacent;
using testing::naive_graph;

struct EdgeCase {
  int k, d, s;
  std::uint64_t edges;
};

// Counted by an offline brute force over all word pairs.
const EdgeCase kEdgeCounts[] = {
    {2, 2, 1, 5},  {3, 2, 1, 13},  {3, 2, 2, 22},  {4, 2, 2, 54},  {2, 3, 1, 21},
    {3, 3, 2, 198}, {5, 2, 2, 118}, {4, 2, 3, 92}, {4, 2, 1, 29},
};

TEST(Graph, EdgeCountsMatchBruteForce) {
  for (const auto& c : kEdgeCounts) {
    const AOParams p = make_params(c.k, c.d, c.s);
    EXPECT_EQ(edge_count_enumerated(p), c.edges) << c.k << c.d << c.s;
    EXPECT_EQ(naive_graph(c.k, c.d, c.s).edges.size(), c.edges);
    EXPECT_EQ(materialize(p).edge_count(), c.edges);
  }
}

TEST(Graph, FormulaS1) {
  EXPECT_EQ(edge_count_formula_s1(3, 2), 13u);
  EXPECT_EQ(edge_count_formula_s1(2, 3), 21u);
  for (int d = 2; d <= 6; ++d) {
    for (int k = 2; checked_pow(d, k).value_or(~0ull) <= 4096; ++k) {
      EXPECT_EQ(edge_count_formula_s1(k, d),
                edge_count_enumerated(make_params(k, d, 1)))
          << "k=" << k << " d=" << d;
    }
  }
}

TEST(Graph, NeighborsOfAab) {
  const AOParams p = make_params(3, 2, 1);
  std::vector<Word> expect{parse_word("aaa"), parse_word("aba"),
                           parse_word("abb"), parse_word("baa")};
  EXPECT_EQ(neighbors(parse_word("aab"), p), expect);
}

TEST(Graph, ExplicitGraphRejectsLoopsAndNormalizes) {
  EXPECT_THROW(ExplicitGraph({"a", "b"}, {{0, 0}}), InvalidInput);
  EXPECT_THROW(ExplicitGraph({"a", "b"}, {{0, 2}}), InvalidInput);
  ExplicitGraph g({"a", "b", "c"}, {{2, 0}, {0, 2}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.index_of("c"), std::optional<std::uint32_t>(2));
}

TEST(Graph, AoMatrixIsOffDiagonalPartOfG2n1) {
  for (int n = 2; n <= 6; ++n) {
    const ExplicitGraph m = ao_matrix_graph(n);
    ASSERT_EQ(m.vertex_count(), static_cast<std::size_t>(n * (n - 1)));
    const ExplicitGraph host = materialize(make_params(2, n, 1));
    std::vector<std::uint32_t> off;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) off.push_back(static_cast<std::uint32_t>(i * n + j));
      }
    }
    EXPECT_EQ(induced_subgraph(host, off).edges(), m.edges()) << n;
    EXPECT_EQ(ao_matrix_index(2, 1, n), static_cast<std::uint32_t>(n - 1));
    EXPECT_EQ(m.labels()[ao_matrix_index(2, 1, n)], "v2,1");
  }
}

TEST(Graph, ReducedEmbeddingRequiresLongTags) {
  EXPECT_THROW(reduced_embedding(parse_word("abab"), make_params(4, 2, 2)),
               InvalidInput);
  const AOParams p = make_params(5, 2, 2);
  EXPECT_EQ(reduced_host(p), make_params(6, 2, 3));
  EXPECT_EQ(reduced_embedding(parse_word("abbab"), p), parse_word("abbbab"));
}

TEST(Graph, Exports) {
  const ExplicitGraph g = materialize(make_params(2, 2, 1));
  EXPECT_EQ(to_edge_list(g), "aa ab\naa ba\nab ba\nab bb\nba bb\n");
  const std::string dot = to_dot(g);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("  1 [label=\"ab\"];"), std::string::npos);
  EXPECT_NE(dot.find("  1 -- 3;"), std::string::npos);
  const auto doc = to_json(g);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(graph_from_json(doc), g);
}

// Property: the implicit neighbor function agrees with the string
// definition, is symmetric, and stays within 2 d^s entries.
TEST(GraphProperty, NeighborsAgreeWithDefinition) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 60; ++trial) {
    auto [k, d, s] = testing::draw_params(rng, 6, 4, 700);
    const AOParams p = make_params(k, d, s);
    const auto g = naive_graph(k, d, s);
    std::uint64_t degree_sum = 0;
    for (std::size_t u = 0; u < g.words.size(); ++u) {
      auto ranks = neighbor_ranks(u, p);
      degree_sum += ranks.size();
      EXPECT_LE(ranks.size(), 2 * checked_pow(d, s).value());
      std::size_t count = 0;
      for (std::size_t v = 0; v < g.words.size(); ++v) {
        bool adj = g.adjacent(u, v);
        bool listed = std::binary_search(ranks.begin(), ranks.end(), v);
        EXPECT_EQ(adj, listed) << g.words[u] << " " << g.words[v];
        count += adj;
        // Symmetry of the library predicate.
        Word wu = word_from_rank(u, k, d), wv = word_from_rank(v, k, d);
        EXPECT_EQ(overlap_adjacent(wu, wv, p), overlap_adjacent(wv, wu, p));
      }
      EXPECT_EQ(count, ranks.size());
    }
    EXPECT_EQ(degree_sum / 2, g.edges.size());
  }
}

// Property: x m z -> x m m z preserves adjacency in both directions.
TEST(GraphProperty, ReducedEmbeddingIsInducedCopy) {
  for (int k = 3; k <= 7; ++k) {
    for (int s = 1; 2 * s < k; ++s) {
      for (int d = 1; d <= 3 && checked_pow(d, k).value() <= 300; ++d) {
        const AOParams p = make_params(k, d, s);
        const AOParams host = reduced_host(p);
        auto words = testing::all_words(k, d);
        for (const auto& a : words) {
          for (const auto& b : words) {
            Word ea = reduced_embedding(parse_word(a), p);
            Word eb = reduced_embedding(parse_word(b), p);
            EXPECT_EQ(naive_adjacent(a, b, s),
                      naive_adjacent(render(ea, d), render(eb, d), host.s));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace aoglab
