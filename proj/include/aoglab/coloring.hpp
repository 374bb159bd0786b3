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

// Proper colorings of alphabet overlap graphs.
//
// For t <= k/2 a word splits as (leading tag, middle, trailing tag). Words
// whose two tags agree form cliques indexed by the middle word and get one
// color per middle word; every other word takes the color of its trailing
// tag. This uses d^(k-2t) + d^t colors. That count is optimal for small
// cases such as G(2,d,1) with d <= 4 or G(4,2,2), but not in general:
// G(2,5,1) is 5-colorable.
//
// For t > k/2 the map x m z -> x m m z places G(k, d, s) inside G(2t, d, t).
// Words with equal tags share one extra color, and the remaining "columns"
// (trailing tags) are colored by recursively coloring G(t, d, k-t), whose
// adjacency is exactly the conflict relation between columns.

#ifndef AOGLAB_COLORING_HPP_
#define AOGLAB_COLORING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aoglab/error.hpp"
#include "aoglab/graph.hpp"
#include "aoglab/words.hpp"

namespace aoglab {

inline constexpr std::size_t kDefaultChromaticOracleMax = 64;

struct Coloring {
  // Set when the coloring is over G(params), indexed by word rank.
  std::optional<AOParams> params;
  std::vector<std::uint32_t> colors;
  std::uint32_t palette = 0;
};

// d^(k-2t) + d^t.
std::uint64_t theorem3_palette(const AOParams& p);
// 1 + d^t, the bound obtained from a single embedding step.
std::uint64_t single_step_bound(const AOParams& p);
// f(k, t) = d^(k-2t) + d^t when 2t <= k, else 1 + f(t, 2t-k).
std::uint64_t recursive_palette(int k, int t, int d);

Coloring theorem3_coloring(const AOParams& p,
                           std::uint64_t cap = kDefaultMaxVertices);

// color(v_ij) = j - 1 over ao_matrix_graph(n).
Coloring ao_matrix_coloring(int n);

Coloring recursive_coloring(const AOParams& p,
                            std::uint64_t cap = kDefaultMaxVertices);

Verdict verify_coloring(const Coloring& c);
Verdict verify_coloring(const ExplicitGraph& g, const Coloring& c);

// Exact chromatic number: clique lower bound, greedy upper bound, then a
// backtracking search over vertices in descending-degree order for each
// palette size in between.
int chromatic_number_exact_oracle(
    const ExplicitGraph& g, std::size_t max_vertices = kDefaultChromaticOracleMax);

// A coloring with exactly chromatic_number_exact_oracle(g) colors, from the
// same search.
Coloring minimum_coloring(const ExplicitGraph& g,
                          std::size_t max_vertices = kDefaultChromaticOracleMax);

// Exact for graphs up to 64 vertices.
std::vector<std::uint32_t> maximum_clique(const ExplicitGraph& g);

struct ChromaticReport {
  AOParams params;
  std::optional<std::uint64_t> exact;
  // d^(k-2t) + d^t when t <= k/2.
  std::optional<std::uint64_t> closed_form;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> single_step_bound;
  std::optional<std::uint64_t> recursive_bound;
  std::optional<std::uint64_t> oracle;
  std::vector<std::string> notes;
};

struct ChromaticReportOptions {
  bool use_oracle = false;
  std::size_t oracle_max_vertices = kDefaultChromaticOracleMax;
  // Graphs up to this size are materialized for the clique search.
  std::uint64_t clique_search_max_vertices = 4096;
  std::uint64_t cap = kDefaultMaxVertices;
};

ChromaticReport chromatic_report(const AOParams& p,
                                 const ChromaticReportOptions& options = {});

}  // namespace aoglab

#endif  // AOGLAB_COLORING_HPP_
