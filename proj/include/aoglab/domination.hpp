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

#ifndef AOGLAB_DOMINATION_HPP_
#define AOGLAB_DOMINATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "aoglab/error.hpp"
#include "aoglab/graph.hpp"
#include "aoglab/words.hpp"

namespace aoglab {

inline constexpr std::size_t kDefaultDominationOracleMax = 32;

struct DominatingSet {
  AOParams params;
  std::vector<Word> members;
};

// { tag . anchor : every tag of length t }, sorted. The anchor has length s
// and defaults to all zeros. Any word v is dominated by suffix_t(v) . anchor.
DominatingSet dominating_set_construct(const AOParams& p,
                                       std::optional<Word> anchor = std::nullopt,
                                       std::uint64_t cap = kDefaultMaxVertices);

Verdict verify_dominating(const DominatingSet& ds,
                          std::uint64_t cap = kDefaultMaxVertices);

// Minimum dominating set size by subset search in increasing cardinality,
// colex order within each size.
int domination_number_exact_oracle(
    const ExplicitGraph& g,
    std::size_t max_vertices = kDefaultDominationOracleMax);

// A minimum dominating set (vertex indices) found by the same search.
std::vector<std::uint32_t> minimum_dominating_set(
    const ExplicitGraph& g,
    std::size_t max_vertices = kDefaultDominationOracleMax);

}  // namespace aoglab

#endif  // AOGLAB_DOMINATION_HPP_
