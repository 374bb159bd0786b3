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

#include "aoglab/domination.hpp"

#include <algorithm>
#include <bit>

namespace aoglab {

DominatingSet dominating_set_construct(const AOParams& p,
                                       std::optional<Word> anchor,
                                       std::uint64_t cap) {
  make_params(p.k, p.d, p.s);
  if (2 * p.t() > p.k) {
    throw InvalidInput("dominating set construction requires t <= k/2");
  }
  vertex_count(p, cap);
  const Word x = anchor ? *anchor : Word(std::vector<Letter>(p.s, 0));
  check_word(x, p.s, p.d);

  DominatingSet ds{p, {}};
  for (const Word& tag : enumerate_words(p.t(), p.d, cap)) {
    ds.members.push_back(tag.concat(x));
  }
  if (Verdict v = verify_dominating(ds, cap); !v) {
    throw ConstructionFailed("dominating set construction failed: " + v.reason());
  }
  return ds;
}

Verdict verify_dominating(const DominatingSet& ds, std::uint64_t cap) {
  const AOParams& p = ds.params;
  const std::uint64_t n = vertex_count(p, cap);
  std::vector<bool> covered(n, false);
  for (const Word& m : ds.members) {
    try {
      check_word(m, p.k, p.d);
    } catch (const InvalidInput& e) {
      return Verdict::reject(std::string("invalid member: ") + e.what());
    }
    const std::uint64_t r = word_rank(m, p.d);
    covered[r] = true;
    for (std::uint64_t w : neighbor_ranks(r, p)) covered[w] = true;
  }
  for (std::uint64_t r = 0; r < n; ++r) {
    if (!covered[r]) {
      return Verdict::reject("vertex " + render(word_from_rank(r, p.k, p.d), p.d) +
                             " is not dominated");
    }
  }
  return Verdict::accept();
}

std::vector<std::uint32_t> minimum_dominating_set(const ExplicitGraph& g,
                                                  std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices || n > 63) {
    throw SizeGuardExceeded("domination oracle limited to " +
                            std::to_string(std::min<std::size_t>(max_vertices, 63)) +
                            " vertices, graph has " + std::to_string(n));
  }
  if (n == 0) return {};
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (auto w : g.adjacency()[v]) closed[v] |= std::uint64_t{1} << w;
  }
  for (std::size_t size = 1; size <= n; ++size) {
    // Gosper's hack walks same-popcount masks in colex order
    std::uint64_t set = (std::uint64_t{1} << size) - 1;
    while (set <= all) {
      std::uint64_t cover = 0;
      for (std::uint64_t bits = set; bits != 0; bits &= bits - 1) {
        cover |= closed[std::countr_zero(bits)];
      }
      if (cover == all) {
        std::vector<std::uint32_t> members;
        for (std::uint64_t bits = set; bits != 0; bits &= bits - 1) {
          members.push_back(static_cast<std::uint32_t>(std::countr_zero(bits)));
        }
        return members;
      }
      const std::uint64_t low = set & (~set + 1);
      const std::uint64_t ripple = set + low;
      if (ripple == 0) break;
      set = ripple | (((set ^ ripple) >> 2) / low);
    }
  }
  return {};
}

int domination_number_exact_oracle(const ExplicitGraph& g,
                                   std::size_t max_vertices) {
  return static_cast<int>(minimum_dominating_set(g, max_vertices).size());
}

}  // namespace aoglab
