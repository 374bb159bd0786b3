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

// The alphabet overlap graph as an implicit neighbor oracle, plus explicit
// graphs for oracles and export.

#ifndef AOGLAB_GRAPH_HPP_
#define AOGLAB_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aoglab/words.hpp"
#include "json.hpp"

namespace aoglab {

// Sorted, deduplicated neighbor ranks of the word with rank `rank`.
std::vector<std::uint64_t> neighbor_ranks(std::uint64_t rank,
                                          const AOParams& p);

// Exact neighbor set of v, sorted lexicographically. At most 2 d^s entries.
std::vector<Word> neighbors(const Word& v, const AOParams& p);

std::uint64_t edge_count_enumerated(const AOParams& p,
                                    std::uint64_t cap = kDefaultMaxVertices);

// Closed form for s = 1 (k >= 2, d >= 2), counting words by degree:
// constant words have degree 2d-2, the d(d-1) alternating words 2d-1,
// and every other word 2d.
std::uint64_t edge_count_formula_s1(int k, int d);

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Simple undirected graph. Edges are stored (smaller, larger), sorted.
class ExplicitGraph {
 public:
  ExplicitGraph() = default;
  // Normalizes the edge list; throws InvalidInput on loops or bad indices.
  ExplicitGraph(std::vector<std::string> labels, std::vector<Edge> edges,
                std::optional<AOParams> params = std::nullopt);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<AOParams>& params() const { return params_; }

  // Sorted neighbor lists.
  const std::vector<std::vector<std::uint32_t>>& adjacency() const {
    return adjacency_;
  }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::size_t degree(std::uint32_t v) const { return adjacency_[v].size(); }
  std::optional<std::uint32_t> index_of(const std::string& label) const;

  friend bool operator==(const ExplicitGraph& a, const ExplicitGraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_ &&
           a.params_ == b.params_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::optional<AOParams> params_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

// Vertices v_ij (i != j, 1-based) in row-major order; v_ij ~ v_xy iff x = j
// or i = y.
ExplicitGraph ao_matrix_graph(int n);
std::uint32_t ao_matrix_index(int i, int j, int n);

// The graph G(2t, d, t) hosting the image of reduced_embedding.
AOParams reduced_host(const AOParams& p);

// x m z -> x m m z, where |x| = |z| = s and |m| = 2t - k. Requires t > k/2.
Word reduced_embedding(const Word& v, const AOParams& p);

// Vertex i is the word of rank i; labels are rendered words.
ExplicitGraph materialize(const AOParams& p,
                          std::uint64_t cap = kDefaultMaxVertices);

// Induced subgraph on the given vertex indices (relabelled in given order).
ExplicitGraph induced_subgraph(const ExplicitGraph& g,
                               const std::vector<std::uint32_t>& vertices);

std::string to_dot(const ExplicitGraph& g);
std::string to_edge_list(const ExplicitGraph& g);
nlohmann::ordered_json to_json(const ExplicitGraph& g);
ExplicitGraph graph_from_json(const nlohmann::ordered_json& doc);

}  // namespace aoglab

#endif  // AOGLAB_GRAPH_HPP_
