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

#include "aoglab/graph.hpp"

#include <algorithm>
#include <sstream>

#include "aoglab/error.hpp"
#include "aoglab/serialize.hpp"

namespace aoglab {

namespace {

std::uint64_t pow_u64(int base, int exp) {
  return *checked_pow(static_cast<std::uint64_t>(base),
                      static_cast<unsigned>(exp));
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) {
    throw SizeGuardExceeded("edge count overflows 64 bits");
  }
  return a * b;
}

}  // namespace

std::vector<std::uint64_t> neighbor_ranks(std::uint64_t rank,
                                          const AOParams& p) {
  const std::uint64_t shift = pow_u64(p.d, p.s);
  const std::uint64_t tags = pow_u64(p.d, p.t());
  const std::uint64_t suffix = rank % tags;
  const std::uint64_t prefix = rank / shift;
  std::vector<std::uint64_t> out;
  out.reserve(2 * shift);
  for (std::uint64_t x = 0; x < shift; ++x) {
    out.push_back(suffix * shift + x);  // prefix_t(w) = suffix_t(v)
    out.push_back(x * tags + prefix);   // suffix_t(w) = prefix_t(v)
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), rank), out.end());
  return out;
}

std::vector<Word> neighbors(const Word& v, const AOParams& p) {
  check_word(v, p.k, p.d);
  std::vector<Word> out;
  for (std::uint64_t r : neighbor_ranks(word_rank(v, p.d), p)) {
    out.push_back(word_from_rank(r, p.k, p.d));
  }
  return out;
}

std::uint64_t edge_count_enumerated(const AOParams& p, std::uint64_t cap) {
  const std::uint64_t n = vertex_count(p, cap);
  std::uint64_t degree_sum = 0;
  for (std::uint64_t r = 0; r < n; ++r) degree_sum += neighbor_ranks(r, p).size();
  return degree_sum / 2;
}

std::uint64_t edge_count_formula_s1(int k, int d) {
  if (k < 2 || d < 2) throw InvalidInput("formula requires k >= 2 and d >= 2");
  auto dk = checked_pow(static_cast<std::uint64_t>(d),
                        static_cast<unsigned>(k));
  if (!dk) throw SizeGuardExceeded("d^k overflows 64 bits");
  const std::uint64_t dd = static_cast<std::uint64_t>(d);
  const std::uint64_t alternating = dd * (dd - 1);
  const std::uint64_t generic = *dk - dd - alternating;
  const std::uint64_t doubled = mul_checked(2 * dd, generic) +
                                (2 * dd - 1) * alternating + (2 * dd - 2) * dd;
  return doubled / 2;
}

ExplicitGraph::ExplicitGraph(std::vector<std::string> labels,
                             std::vector<Edge> edges,
                             std::optional<AOParams> params)
    : labels_(std::move(labels)),
      edges_(std::move(edges)),
      params_(params),
      adjacency_(labels_.size()) {
  for (auto& [u, v] : edges_) {
    if (u >= labels_.size() || v >= labels_.size()) {
      throw InvalidInput("edge endpoint out of range");
    }
    if (u == v) throw InvalidInput("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool ExplicitGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<std::uint32_t> ExplicitGraph::index_of(
    const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - labels_.begin());
}

std::uint32_t ao_matrix_index(int i, int j, int n) {
  // row i holds n-1 entries; skip the missing diagonal
  return static_cast<std::uint32_t>((i - 1) * (n - 1) + (j < i ? j - 1 : j - 2));
}

ExplicitGraph ao_matrix_graph(int n) {
  if (n < 2) throw InvalidInput("AO matrix graph order must be >= 2");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      labels.push_back("v" + std::to_string(i) + "," + std::to_string(j));
      cells.emplace_back(i, j);
    }
  }
  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a < cells.size(); ++a) {
    for (std::uint32_t b = a + 1; b < cells.size(); ++b) {
      auto [i, j] = cells[a];
      auto [x, y] = cells[b];
      if (x == j || i == y) edges.emplace_back(a, b);
    }
  }
  return ExplicitGraph(std::move(labels), std::move(edges));
}

AOParams reduced_host(const AOParams& p) {
  return AOParams{2 * p.t(), p.d, p.t()};
}

Word reduced_embedding(const Word& v, const AOParams& p) {
  check_word(v, p.k, p.d);
  if (2 * p.t() <= p.k) {
    throw InvalidInput("reduced embedding requires tag length t > k/2");
  }
  const std::size_t s = p.s;
  const std::size_t middle = 2 * p.t() - p.k;
  const Word x = v.slice(0, s);
  const Word m = v.slice(s, middle);
  const Word z = v.slice(s + middle, s);
  return x.concat(m).concat(m).concat(z);
}

ExplicitGraph materialize(const AOParams& p, std::uint64_t cap) {
  const std::uint64_t n = vertex_count(p, std::min<std::uint64_t>(cap, UINT32_MAX));
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<Edge> edges;
  for (std::uint64_t r = 0; r < n; ++r) {
    labels.push_back(render(word_from_rank(r, p.k, p.d), p.d));
    for (std::uint64_t w : neighbor_ranks(r, p)) {
      if (w > r) {
        edges.emplace_back(static_cast<std::uint32_t>(r),
                           static_cast<std::uint32_t>(w));
      }
    }
  }
  return ExplicitGraph(std::move(labels), std::move(edges), p);
}

ExplicitGraph induced_subgraph(const ExplicitGraph& g,
                               const std::vector<std::uint32_t>& vertices) {
  std::vector<std::string> labels;
  for (auto v : vertices) labels.push_back(g.labels().at(v));
  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a < vertices.size(); ++a) {
    for (std::uint32_t b = a + 1; b < vertices.size(); ++b) {
      if (g.has_edge(vertices[a], vertices[b])) edges.emplace_back(a, b);
    }
  }
  return ExplicitGraph(std::move(labels), std::move(edges));
}

std::string to_dot(const ExplicitGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  if (g.params()) {
    out << "  label=\"G(" << g.params()->k << "," << g.params()->d << ","
        << g.params()->s << ")\";\n";
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << g.labels()[v] << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const ExplicitGraph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += g.labels()[u] + " " + g.labels()[v] + "\n";
  }
  return out;
}

nlohmann::ordered_json to_json(const ExplicitGraph& g) {
  nlohmann::ordered_json doc;
  doc["schema"] = kSchemaVersion;
  if (g.params()) doc["params"] = to_json(*g.params());
  doc["vertices"] = g.labels();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc;
}

ExplicitGraph graph_from_json(const nlohmann::ordered_json& doc) {
  try {
    std::optional<AOParams> params;
    if (doc.contains("params")) params = params_from_json(doc.at("params"));
    auto labels = doc.at("vertices").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      edges.emplace_back(e.at(0).get<std::uint32_t>(),
                         e.at(1).get<std::uint32_t>());
    }
    return ExplicitGraph(std::move(labels), std::move(edges), params);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed graph document: ") + e.what());
  }
}

}  // namespace aoglab
