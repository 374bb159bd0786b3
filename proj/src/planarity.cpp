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

#include "aoglab/planarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace aoglab {

namespace {

struct FixtureRow {
  const char* vertex;
  std::vector<const char*> clockwise;
};

// Hand-checked drawings; verify_embedding confirms F = 3 and F = 14.
const std::vector<FixtureRow>& fixture_221() {
  static const std::vector<FixtureRow> rows = {
      {"aa", {"ab", "ba"}},
      {"ab", {"aa", "ba", "bb"}},
      {"ba", {"ab", "aa", "bb"}},
      {"bb", {"ba", "ab"}},
  };
  return rows;
}

// G(2,3,1) has 9 vertices and 21 = 3V - 6 edges, so every face is a triangle.
const std::vector<FixtureRow>& fixture_231() {
  static const std::vector<FixtureRow> rows = {
      {"aa", {"ab", "ca", "ac", "ba"}},
      {"ab", {"aa", "ba", "bb", "bc", "ca"}},
      {"ac", {"ba", "aa", "ca", "cc", "cb"}},
      {"ba", {"ab", "aa", "ac", "cb", "bb"}},
      {"bb", {"bc", "ab", "ba", "cb"}},
      {"bc", {"ca", "ab", "bb", "cb", "cc"}},
      {"ca", {"ac", "aa", "ab", "bc", "cc"}},
      {"cb", {"bb", "ba", "ac", "cc", "bc"}},
      {"cc", {"cb", "ac", "ca", "bc"}},
  };
  return rows;
}

RotationSystem from_rows(const ExplicitGraph& g,
                         const std::vector<FixtureRow>& rows) {
  RotationSystem rotation(g.vertex_count());
  for (const auto& row : rows) {
    const auto v = g.index_of(row.vertex).value();
    for (const char* w : row.clockwise) {
      rotation[v].push_back(g.index_of(w).value());
    }
  }
  return rotation;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

std::string to_string(PlanarityStatus status) {
  switch (status) {
    case PlanarityStatus::kPlanar:
      return "planar";
    case PlanarityStatus::kNonPlanar:
      return "nonplanar";
    case PlanarityStatus::kUnknown:
      return "unknown";
  }
  return "unknown";
}

BipartiteWitness k33_witness(const AOParams& p) {
  make_params(p.k, p.d, p.s);
  const int t = p.t();
  if (2 * t > p.k) throw InvalidInput("K3,3 witness requires t <= k/2");
  const auto tags = checked_pow(static_cast<std::uint64_t>(p.d),
                                static_cast<unsigned>(t));
  if (!tags || *tags < 4) {
    throw InvalidInput("K3,3 witness requires at least four distinct tags");
  }
  const Word w(std::vector<Letter>(p.k - 2 * t, 0));
  const Word alpha = word_from_rank(0, t, p.d);
  BipartiteWitness out{p, {}, {}};
  for (std::uint64_t r = 1; r <= 3; ++r) {
    const Word other = word_from_rank(r, t, p.d);
    out.left.push_back(alpha.concat(w).concat(other));
    out.right.push_back(other.concat(w).concat(alpha));
  }
  return out;
}

BipartiteWitness k44_witness(const AOParams& p) {
  make_params(p.k, p.d, p.s);
  if (p.t() != 1 || p.k < 3 || p.d < 2) {
    throw InvalidInput("K4,4 witness requires t = 1, k >= 3, d >= 2");
  }
  const Word a{0};
  const Word b{1};
  const Word w(std::vector<Letter>(p.k - 2, 0));
  std::vector<Letter> alt(p.k - 2, 0);
  alt.back() = 1;
  const Word w2(std::move(alt));
  auto make = [](const Word& x, const Word& m, const Word& z) {
    return x.concat(m).concat(z);
  };
  return BipartiteWitness{
      p,
      {make(b, w, b), make(b, w2, b), make(a, w2, a), make(a, w, a)},
      {make(b, w2, a), make(b, w, a), make(a, w, b), make(a, w2, b)}};
}

Verdict verify_witness(const BipartiteWitness& w) {
  const AOParams& p = w.params;
  if (w.left.size() != w.right.size() ||
      (w.left.size() != 3 && w.left.size() != 4)) {
    return Verdict::reject("witness classes must both have size 3 or both 4");
  }
  std::set<Word> distinct;
  for (const auto* side : {&w.left, &w.right}) {
    for (const Word& v : *side) {
      try {
        check_word(v, p.k, p.d);
      } catch (const InvalidInput& e) {
        return Verdict::reject(std::string("invalid witness vertex: ") + e.what());
      }
      if (!distinct.insert(v).second) {
        return Verdict::reject("witness vertex " + render(v, p.d) +
                               " appears twice");
      }
    }
  }
  for (const Word& u : w.left) {
    for (const Word& v : w.right) {
      if (!overlap_adjacent(u, v, p)) {
        return Verdict::reject("witness pair " + render(u, p.d) + ", " +
                               render(v, p.d) + " is not adjacent");
      }
    }
  }
  return Verdict::accept();
}

std::size_t count_faces(const ExplicitGraph& g, const RotationSystem& rotation) {
  // position of u in rotation[v]
  std::vector<std::map<std::uint32_t, std::size_t>> where(g.vertex_count());
  for (std::uint32_t v = 0; v < rotation.size(); ++v) {
    for (std::size_t i = 0; i < rotation[v].size(); ++i) {
      where[v][rotation[v][i]] = i;
    }
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::size_t faces = 0;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (rotation[v].empty()) ++faces;
  }
  for (std::uint32_t u = 0; u < rotation.size(); ++u) {
    for (std::uint32_t v : rotation[u]) {
      if (seen.count({u, v}) != 0) continue;
      ++faces;
      std::uint32_t a = u;
      std::uint32_t b = v;
      while (seen.insert({a, b}).second) {
        // next dart leaves b towards the successor of a around b
        const auto& around = rotation[b];
        const std::uint32_t c = around[(where[b].at(a) + 1) % around.size()];
        a = b;
        b = c;
      }
    }
  }
  return faces;
}

Verdict verify_embedding(const ExplicitGraph& g, const RotationSystem& rotation) {
  const std::size_t n = g.vertex_count();
  if (rotation.size() != n) {
    return Verdict::reject("rotation system covers " +
                           std::to_string(rotation.size()) + " of " +
                           std::to_string(n) + " vertices");
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    auto sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.adjacency()[v]) {
      return Verdict::reject("rotation at " + g.labels()[v] +
                             " is not a permutation of its neighbors");
    }
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [u, v] : g.edges()) parent[find_root(parent, u)] = find_root(parent, v);
  std::map<std::size_t, long long> vertices;
  std::map<std::size_t, long long> edges;
  std::map<std::size_t, long long> faces;
  for (std::uint32_t v = 0; v < n; ++v) ++vertices[find_root(parent, v)];
  for (auto [u, v] : g.edges()) ++edges[find_root(parent, u)];

  // Faces per component: trace each component on its own.
  for (const auto& [root, count] : vertices) {
    RotationSystem restricted(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      if (find_root(parent, v) == root) restricted[v] = rotation[v];
    }
    std::size_t f = count_faces(g, restricted);
    // count_faces also counts vertices outside the component as isolated
    for (std::uint32_t v = 0; v < n; ++v) {
      if (find_root(parent, v) != root) --f;
    }
    faces[root] = static_cast<long long>(f);
    const long long euler = count - edges[root] + faces[root];
    if (euler != 2) {
      return Verdict::reject("component containing " + g.labels()[root] +
                             " has V - E + F = " + std::to_string(euler) +
                             " (V=" + std::to_string(count) +
                             ", E=" + std::to_string(edges[root]) +
                             ", F=" + std::to_string(faces[root]) + ")");
    }
  }
  return Verdict::accept();
}

RotationSystem planar_fixture(const AOParams& p) {
  make_params(p.k, p.d, p.s);
  if (p.d == 1) return RotationSystem(1);
  const ExplicitGraph g = materialize(p);
  if (p == AOParams{2, 2, 1}) return from_rows(g, fixture_221());
  if (p == AOParams{2, 3, 1}) return from_rows(g, fixture_231());
  throw InvalidInput("no stored planar embedding for this graph");
}

PlanarityVerdict classify_planarity(const AOParams& p) {
  make_params(p.k, p.d, p.s);
  PlanarityVerdict out;
  out.params = p;
  if (p.d == 1 || p == AOParams{2, 2, 1} || p == AOParams{2, 3, 1}) {
    out.status = PlanarityStatus::kPlanar;
    out.embedding = planar_fixture(p);
    out.reason = p.d == 1 ? "single vertex" : "stored embedding";
    if (Verdict v = verify_embedding(materialize(p), *out.embedding); !v) {
      throw ConstructionFailed("stored embedding rejected: " + v.reason());
    }
    return out;
  }
  if (2 * p.t() > p.k) {
    out.status = PlanarityStatus::kUnknown;
    out.reason = "tag length t > k/2 is not classified";
    return out;
  }
  const auto tags = checked_pow(static_cast<std::uint64_t>(p.d),
                                static_cast<unsigned>(p.t()));
  if (tags && *tags >= 4) {
    out.witness = k33_witness(p);
    out.reason = "K3,3 subgraph";
  } else {
    out.witness = k44_witness(p);
    out.reason = "K4,4 subgraph";
  }
  if (Verdict v = verify_witness(*out.witness); !v) {
    throw ConstructionFailed("witness rejected: " + v.reason());
  }
  out.status = PlanarityStatus::kNonPlanar;
  return out;
}

}  // namespace aoglab
