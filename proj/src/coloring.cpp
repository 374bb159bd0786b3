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

#include "aoglab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace aoglab {

namespace {

std::uint64_t pow_u64(int base, int exp) {
  auto v = checked_pow(static_cast<std::uint64_t>(base),
                       static_cast<unsigned>(exp));
  if (!v) throw SizeGuardExceeded("power overflows 64 bits");
  return *v;
}

std::vector<std::uint32_t> theorem3_table(int k, int t, int d) {
  const std::uint64_t n = pow_u64(d, k);
  const std::uint64_t tags = pow_u64(d, t);
  const std::uint64_t shift = pow_u64(d, k - t);
  const std::uint64_t middles = pow_u64(d, k - 2 * t);
  std::vector<std::uint32_t> colors(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    const std::uint64_t lead = r / shift;
    const std::uint64_t trail = r % tags;
    if (lead == trail) {
      colors[r] = static_cast<std::uint32_t>(tags + (r / tags) % middles);
    } else {
      colors[r] = static_cast<std::uint32_t>(trail);
    }
  }
  return colors;
}

// Colors of all words of length k with tag length t; palette f(k, t).
std::vector<std::uint32_t> recursive_table(int k, int t, int d) {
  if (2 * t <= k) return theorem3_table(k, t, d);
  const std::vector<std::uint32_t> columns = recursive_table(t, 2 * t - k, d);
  const std::uint64_t n = pow_u64(d, k);
  const std::uint64_t tags = pow_u64(d, t);
  const std::uint64_t shift = pow_u64(d, k - t);
  std::vector<std::uint32_t> colors(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    const std::uint64_t lead = r / shift;
    const std::uint64_t trail = r % tags;
    colors[r] = lead == trail ? 0 : 1 + columns[trail];
  }
  return colors;
}

Coloring checked(Coloring c, const char* method) {
  if (Verdict v = verify_coloring(c); !v) {
    throw ConstructionFailed(std::string(method) +
                             " produced an improper coloring: " + v.reason());
  }
  return c;
}

// Carraghan-Pardalos style search. Returns false if the budget ran out.
class CliqueSearch {
 public:
  CliqueSearch(const ExplicitGraph& g, std::uint64_t budget)
      : g_(g), budget_(budget) {}

  std::vector<std::uint32_t> run(bool* exhausted) {
    std::vector<std::uint32_t> all(g_.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    std::stable_sort(all.begin(), all.end(), [&](auto a, auto b) {
      return g_.degree(a) > g_.degree(b);
    });
    expand(all);
    if (exhausted != nullptr) *exhausted = budget_ == 0;
    return best_;
  }

 private:
  void expand(const std::vector<std::uint32_t>& cand) {
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (budget_ == 0) return;
      --budget_;
      if (current_.size() + (cand.size() - i) <= best_.size()) return;
      const std::uint32_t v = cand[i];
      current_.push_back(v);
      std::vector<std::uint32_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (g_.has_edge(v, cand[j])) next.push_back(cand[j]);
      }
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
    }
  }

  const ExplicitGraph& g_;
  std::uint64_t budget_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
};

// Greedy clique growth on the implicit graph, seeded from the first few
// ranks; used when the graph is too large to materialize.
std::uint64_t implicit_clique_lower_bound(const AOParams& p, std::uint64_t n) {
  std::uint64_t best = n > 0 ? 1 : 0;
  for (std::uint64_t seed = 0; seed < std::min<std::uint64_t>(n, 64); ++seed) {
    std::vector<std::uint64_t> clique{seed};
    std::vector<std::uint64_t> cand = neighbor_ranks(seed, p);
    while (!cand.empty()) {
      std::uint64_t pick = cand.front();
      std::size_t pick_score = 0;
      std::vector<std::uint64_t> pick_next;
      for (std::uint64_t c : cand) {
        const auto nb = neighbor_ranks(c, p);
        std::vector<std::uint64_t> inter;
        std::set_intersection(cand.begin(), cand.end(), nb.begin(), nb.end(),
                              std::back_inserter(inter));
        if (inter.size() > pick_score || pick_next.empty()) {
          pick = c;
          pick_score = inter.size();
          pick_next = std::move(inter);
        }
      }
      clique.push_back(pick);
      cand = std::move(pick_next);
    }
    best = std::max<std::uint64_t>(best, clique.size());
  }
  return best;
}

}  // namespace

std::uint64_t theorem3_palette(const AOParams& p) {
  return pow_u64(p.d, p.k - 2 * p.t()) + pow_u64(p.d, p.t());
}

std::uint64_t single_step_bound(const AOParams& p) {
  return 1 + pow_u64(p.d, p.t());
}

std::uint64_t recursive_palette(int k, int t, int d) {
  if (2 * t <= k) return pow_u64(d, k - 2 * t) + pow_u64(d, t);
  return 1 + recursive_palette(t, 2 * t - k, d);
}

Coloring theorem3_coloring(const AOParams& p, std::uint64_t cap) {
  make_params(p.k, p.d, p.s);
  if (2 * p.t() > p.k) {
    throw InvalidInput("theorem3_coloring requires tag length t <= k/2");
  }
  vertex_count(p, cap);
  Coloring c{p, theorem3_table(p.k, p.t(), p.d),
             static_cast<std::uint32_t>(theorem3_palette(p))};
  return checked(std::move(c), "theorem3_coloring");
}

Coloring ao_matrix_coloring(int n) {
  if (n < 2) throw InvalidInput("AO matrix graph order must be >= 2");
  Coloring c;
  c.palette = static_cast<std::uint32_t>(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) c.colors.push_back(static_cast<std::uint32_t>(j - 1));
    }
  }
  return c;
}

Coloring recursive_coloring(const AOParams& p, std::uint64_t cap) {
  make_params(p.k, p.d, p.s);
  vertex_count(p, cap);
  Coloring c{p, recursive_table(p.k, p.t(), p.d),
             static_cast<std::uint32_t>(recursive_palette(p.k, p.t(), p.d))};
  return checked(std::move(c), "recursive_coloring");
}

Verdict verify_coloring(const Coloring& c) {
  if (!c.params) {
    return Verdict::reject("coloring is not attached to AO parameters");
  }
  const AOParams& p = *c.params;
  auto n = checked_pow(static_cast<std::uint64_t>(p.d),
                       static_cast<unsigned>(p.k));
  if (!n || c.colors.size() != *n) {
    return Verdict::reject("coloring assigns " + std::to_string(c.colors.size()) +
                           " vertices, graph has " +
                           (n ? std::to_string(*n) : "too many"));
  }
  for (std::uint64_t r = 0; r < *n; ++r) {
    if (c.colors[r] >= c.palette) {
      return Verdict::reject("vertex " + render(word_from_rank(r, p.k, p.d), p.d) +
                             " has color " + std::to_string(c.colors[r]) +
                             " outside palette " + std::to_string(c.palette));
    }
  }
  for (std::uint64_t r = 0; r < *n; ++r) {
    for (std::uint64_t w : neighbor_ranks(r, p)) {
      if (w > r && c.colors[r] == c.colors[w]) {
        return Verdict::reject(
            "adjacent vertices " + render(word_from_rank(r, p.k, p.d), p.d) +
            " and " + render(word_from_rank(w, p.k, p.d), p.d) +
            " share color " + std::to_string(c.colors[r]));
      }
    }
  }
  return Verdict::accept();
}

Verdict verify_coloring(const ExplicitGraph& g, const Coloring& c) {
  if (c.colors.size() != g.vertex_count()) {
    return Verdict::reject("coloring assigns " + std::to_string(c.colors.size()) +
                           " vertices, graph has " +
                           std::to_string(g.vertex_count()));
  }
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    if (c.colors[v] >= c.palette) {
      return Verdict::reject("vertex " + g.labels()[v] + " has color " +
                             std::to_string(c.colors[v]) + " outside palette " +
                             std::to_string(c.palette));
    }
  }
  for (auto [u, v] : g.edges()) {
    if (c.colors[u] == c.colors[v]) {
      return Verdict::reject("adjacent vertices " + g.labels()[u] + " and " +
                             g.labels()[v] + " share color " +
                             std::to_string(c.colors[u]));
    }
  }
  return Verdict::accept();
}

std::vector<std::uint32_t> maximum_clique(const ExplicitGraph& g) {
  if (g.vertex_count() > 64) {
    throw SizeGuardExceeded("exact clique search is limited to 64 vertices");
  }
  return CliqueSearch(g, std::numeric_limits<std::uint64_t>::max()).run(nullptr);
}

Coloring minimum_coloring(const ExplicitGraph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices || n > 64) {
    throw SizeGuardExceeded("chromatic oracle limited to " +
                            std::to_string(std::min<std::size_t>(max_vertices, 64)) +
                            " vertices, graph has " + std::to_string(n));
  }
  Coloring result;
  result.params = g.params();
  if (n == 0) return result;

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return g.degree(a) > g.degree(b);
  });
  // neighbors of order[i] among order[0..i), as bits over positions
  std::vector<std::uint64_t> earlier(n, 0);
  std::vector<std::uint32_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<std::uint32_t>(i);
  for (auto [u, v] : g.edges()) {
    auto pu = position[u];
    auto pv = position[v];
    if (pu > pv) std::swap(pu, pv);
    earlier[pv] |= std::uint64_t{1} << pu;
  }

  // greedy upper bound in the same order
  std::vector<int> color(n, -1);
  int upper = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t taken = 0;
    for (std::uint64_t bits = earlier[i]; bits != 0; bits &= bits - 1) {
      taken |= std::uint64_t{1} << color[std::countr_zero(bits)];
    }
    color[i] = std::countr_one(taken);
    upper = std::max(upper, color[i] + 1);
  }
  std::vector<int> best = color;
  const int lower = static_cast<int>(maximum_clique(g).size());

  // class_mask[c] = positions currently holding color c
  std::vector<std::uint64_t> class_mask;
  auto colorable = [&](int palette) {
    class_mask.assign(palette, 0);
    auto search = [&](auto&& self, std::size_t i, int used) -> bool {
      if (i == n) return true;
      const int limit = std::min(palette, used + 1);
      for (int c = 0; c < limit; ++c) {
        if ((class_mask[c] & earlier[i]) != 0) continue;
        class_mask[c] |= std::uint64_t{1} << i;
        color[i] = c;
        if (self(self, i + 1, std::max(used, c + 1))) return true;
        class_mask[c] &= ~(std::uint64_t{1} << i);
      }
      return false;
    };
    return search(search, 0, 0);
  };

  int palette = upper;
  for (int p = lower; p < upper; ++p) {
    if (colorable(p)) {
      palette = p;
      best = color;
      break;
    }
  }
  result.palette = static_cast<std::uint32_t>(palette);
  result.colors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.colors[order[i]] = static_cast<std::uint32_t>(best[i]);
  }
  return result;
}

int chromatic_number_exact_oracle(const ExplicitGraph& g,
                                  std::size_t max_vertices) {
  return static_cast<int>(minimum_coloring(g, max_vertices).palette);
}

ChromaticReport chromatic_report(const AOParams& p,
                                 const ChromaticReportOptions& options) {
  make_params(p.k, p.d, p.s);
  ChromaticReport report;
  report.params = p;
  const auto n = checked_pow(static_cast<std::uint64_t>(p.d),
                             static_cast<unsigned>(p.k));

  if (options.use_oracle) {
    if (!n || *n > options.oracle_max_vertices) {
      throw SizeGuardExceeded(
          "chromatic oracle requested on a graph with more than " +
          std::to_string(options.oracle_max_vertices) + " vertices");
    }
    report.oracle = chromatic_number_exact_oracle(materialize(p),
                                                  options.oracle_max_vertices);
  }

  if (p.d == 1) {
    report.exact = report.lower = report.upper = 1;
    report.notes.push_back("single-vertex graph");
    return report;
  }

  report.recursive_bound = recursive_palette(p.k, p.t(), p.d);
  if (2 * p.t() <= p.k) {
    report.closed_form = theorem3_palette(p);
    report.upper = *report.closed_form;
    report.notes.push_back(
        "upper: d^(k-2t) + d^t from the tag coloring; not a lower bound in "
        "general (G(2,5,1) has chromatic number 5)");
  } else {
    report.single_step_bound = single_step_bound(p);
    report.upper = std::min(*report.single_step_bound, *report.recursive_bound);
    report.notes.push_back("upper: min(1 + d^t, recursive column-coloring bound)");
  }

  if (report.oracle) {
    report.exact = report.lower = *report.oracle;
    report.upper = std::min(report.upper, *report.oracle);
    report.notes.push_back("exact value from the branch-and-bound oracle");
    if (report.closed_form && *report.closed_form != *report.oracle) {
      report.notes.push_back("oracle is below d^(k-2t) + d^t");
    }
    return report;
  }

  if (n && *n <= options.clique_search_max_vertices && *n <= options.cap) {
    bool exhausted = false;
    const auto clique =
        CliqueSearch(materialize(p, options.cap), 2'000'000).run(&exhausted);
    report.lower = clique.size();
    report.notes.push_back(exhausted ? "lower: best clique within search budget"
                                     : "lower: maximum clique");
  } else if (n && *n <= options.cap) {
    report.lower = implicit_clique_lower_bound(p, *n);
    report.notes.push_back("lower: greedy clique on the implicit graph");
  } else {
    report.lower = 2;
    report.notes.push_back("lower: graph has an edge");
  }
  if (report.lower == report.upper) report.exact = report.lower;
  return report;
}

}  // namespace aoglab
