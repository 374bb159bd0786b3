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

#include "aoglab/hamiltonian.hpp"

#include <algorithm>
#include <limits>

namespace aoglab {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t pow_u64(int base, int exp) {
  return *checked_pow(static_cast<std::uint64_t>(base),
                      static_cast<unsigned>(exp));
}

// Rank arithmetic on k-letter words in base d.
struct RankSpace {
  explicit RankSpace(const AOParams& p)
      : d(static_cast<std::uint64_t>(p.d)),
        shift(pow_u64(p.d, p.s)),
        tags(pow_u64(p.d, p.t())) {}

  std::uint64_t rotate(std::uint64_t r) const {
    return (r % tags) * shift + r / tags;
  }
  std::uint64_t prefix(std::uint64_t r) const { return r / shift; }
  std::uint64_t suffix(std::uint64_t r) const { return r % tags; }
  bool adjacent(std::uint64_t a, std::uint64_t b) const {
    return a != b && (suffix(a) == prefix(b) || prefix(a) == suffix(b));
  }

  std::uint64_t d;
  std::uint64_t shift;
  std::uint64_t tags;
};

bool tail_contains(std::uint64_t r, const RankSpace& space, std::uint64_t letter) {
  std::uint64_t tail = r % space.shift;
  for (std::uint64_t x = space.shift; x > 1; x /= space.d) {
    if (tail % space.d == letter) return true;
    tail /= space.d;
  }
  return false;
}

CycleCertificate checked(CycleCertificate c, const char* method) {
  if (Verdict v = verify_cycle(c); !v) {
    throw ConstructionFailed(std::string(method) +
                             " produced an invalid cycle: " + v.reason());
  }
  return c;
}

bool grid_adjacent(const Word& a, const Word& b) {
  int differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (a[i] + 1 != b[i] && b[i] + 1 != a[i]) return false;
    ++differing;
  }
  return differing == 1;
}

}  // namespace

GridParams make_grid_params(int d, int k) {
  if (d < 2) throw InvalidInput("grid side d must be >= 2");
  if (k < 2) throw InvalidInput("grid dimension must be >= 2");
  return GridParams{d, k};
}

CycleCertificate insertion_hamiltonian(const AOParams& p, std::uint64_t cap) {
  make_params(p.k, p.d, p.s);
  const std::uint64_t n = vertex_count(p, cap);
  const RankSpace space(p);

  // Successor links of the cycle built so far; a^k is rank 0.
  std::vector<std::uint64_t> next(n, kNone);
  next[0] = 0;
  std::vector<bool> placed(n, false);
  placed[0] = true;

  struct Chain {
    std::uint64_t head;
    std::vector<std::uint64_t> members;
  };

  for (int letter = 1; letter < p.d; ++letter) {
    const auto b = static_cast<std::uint64_t>(letter);
    // words over {0..b}, bucketed by how many b's they contain
    std::vector<std::vector<std::uint64_t>> by_count(p.k + 1);
    std::vector<Letter> digits(p.k, 0);
    for (;;) {
      std::uint64_t rank = 0;
      int count = 0;
      for (Letter l : digits) {
        rank = rank * space.d + l;
        count += (l == b);
      }
      if (count > 0) by_count[count].push_back(rank);
      int i = p.k - 1;
      while (i >= 0 && digits[i] == b) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }

    for (int count = 1; count <= p.k; ++count) {
      std::vector<Chain> chains;
      for (std::uint64_t r : by_count[count]) {
        if (placed[r]) continue;
        std::uint64_t head = kNone;
        std::uint64_t cur = r;
        do {
          placed[cur] = true;
          if (tail_contains(cur, space, b)) head = std::min(head, cur);
          cur = space.rotate(cur);
        } while (cur != r);
        if (head == kNone) {
          throw ConstructionFailed("rotation orbit without a qualifying member");
        }
        Chain chain{head, {}};
        cur = head;
        do {
          chain.members.push_back(cur);
          cur = space.rotate(cur);
        } while (cur != head);
        chains.push_back(std::move(chain));
      }
      std::sort(chains.begin(), chains.end(),
                [](const Chain& x, const Chain& y) { return x.head < y.head; });

      for (const Chain& chain : chains) {
        // a^s followed by the first t letters of the head
        const std::uint64_t anchor = space.prefix(chain.head);
        if (next[anchor] == kNone) {
          throw ConstructionFailed("insertion anchor is not yet on the cycle");
        }
        const std::uint64_t after = next[anchor];
        std::uint64_t prev = anchor;
        for (std::uint64_t m : chain.members) {
          next[prev] = m;
          prev = m;
        }
        next[prev] = after;
      }
    }
  }

  CycleCertificate cert{p, {}};
  cert.vertices.reserve(n);
  std::uint64_t cur = 0;
  do {
    if (cur == kNone || cert.vertices.size() == n) {
      throw ConstructionFailed("insertion list does not close into a cycle");
    }
    cert.vertices.push_back(word_from_rank(cur, p.k, p.d));
    cur = next[cur];
  } while (cur != 0);
  return checked(std::move(cert), "insertion_hamiltonian");
}

DigraphDegrees overlap_digraph_degrees(const AOParams& p, std::uint64_t cap) {
  const std::uint64_t n = vertex_count(p, cap);
  const RankSpace space(p);
  DigraphDegrees deg;
  deg.in.assign(space.tags, 0);
  deg.out.assign(space.tags, 0);
  for (std::uint64_t e = 0; e < n; ++e) {
    ++deg.out[space.prefix(e)];
    ++deg.in[space.suffix(e)];
    ++deg.edges;
  }
  return deg;
}

CycleCertificate eulerian_hamiltonian(const AOParams& p, std::uint64_t cap) {
  make_params(p.k, p.d, p.s);
  if (p.d < 2) throw InvalidInput("eulerian construction requires d >= 2");
  if (p.s > p.k / 2) {
    throw InvalidInput("eulerian construction requires s <= floor(k/2)");
  }
  const std::uint64_t n = vertex_count(p, cap);
  const RankSpace space(p);

  // Out-edges of tag u are the k-words u*d^s + x, already in lex order.
  std::vector<std::uint64_t> used(space.tags, 0);
  struct Frame {
    std::uint64_t vertex;
    std::uint64_t via;
  };
  std::vector<Frame> stack{{0, kNone}};
  std::vector<std::uint64_t> circuit;
  circuit.reserve(n);
  while (!stack.empty()) {
    const std::uint64_t u = stack.back().vertex;
    if (used[u] < space.shift) {
      const std::uint64_t e = u * space.shift + used[u]++;
      stack.push_back({space.suffix(e), e});
    } else {
      if (stack.back().via != kNone) circuit.push_back(stack.back().via);
      stack.pop_back();
    }
  }
  if (circuit.size() != n) {
    throw ConstructionFailed("directed overlap graph is not connected");
  }
  std::reverse(circuit.begin(), circuit.end());

  CycleCertificate cert{p, {}};
  cert.vertices.reserve(n);
  for (std::uint64_t e : circuit) {
    cert.vertices.push_back(word_from_rank(e, p.k, p.d));
  }
  return checked(std::move(cert), "eulerian_hamiltonian");
}

std::variant<CycleCertificate, ParityRefusal> grid_hamiltonian(
    const GridParams& g, std::uint64_t cap) {
  make_grid_params(g.d, g.k);
  guarded_count(g.d, g.k, cap);
  if (g.d % 2 != 0) {
    return ParityRefusal{
        g, "grid has d^k = " + std::to_string(g.d) + "^" + std::to_string(g.k) +
               " vertices, an odd number; every step changes the taxicab "
               "distance to the origin by +-1, so a closed walk through all "
               "vertices would need equally many +1 and -1 steps"};
  }
  const auto d = static_cast<Letter>(g.d);

  // d x d base: along the first axis at y = 0, snake over x >= 1 for
  // y = 1..d-1, then return down the column x = 0.
  std::vector<std::vector<Letter>> cycle;
  for (Letter x = 0; x < d; ++x) cycle.push_back({x, 0});
  for (Letter y = 1; y < d; ++y) {
    if (y % 2 == 1) {
      for (Letter x = d - 1; x >= 1; --x) cycle.push_back({x, y});
    } else {
      for (Letter x = 1; x < d; ++x) cycle.push_back({x, y});
    }
  }
  for (Letter y = d - 1; y >= 1; --y) cycle.push_back({0, y});

  for (int dim = 3; dim <= g.k; ++dim) {
    std::vector<std::vector<Letter>> extended;
    extended.reserve(cycle.size() * d);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      for (Letter w = 0; w < d; ++w) {
        auto point = cycle[i];
        point.push_back(i % 2 == 0 ? w : d - 1 - w);
        extended.push_back(std::move(point));
      }
    }
    cycle = std::move(extended);
  }

  CycleCertificate cert{g, {}};
  cert.vertices.reserve(cycle.size());
  for (auto& point : cycle) cert.vertices.emplace_back(std::move(point));
  return checked(std::move(cert), "grid_hamiltonian");
}

Verdict verify_cycle(const CycleCertificate& c) {
  const bool is_grid = std::holds_alternative<GridParams>(c.graph);
  int k = 0;
  int d = 0;
  if (is_grid) {
    const auto& g = std::get<GridParams>(c.graph);
    if (g.d < 2 || g.k < 2) return Verdict::reject("invalid grid parameters");
    k = g.k;
    d = g.d;
  } else {
    const auto& p = std::get<AOParams>(c.graph);
    if (p.d < 1 || p.s < 1 || p.s >= p.k) {
      return Verdict::reject("invalid AO parameters");
    }
    k = p.k;
    d = p.d;
  }
  auto total = checked_pow(static_cast<std::uint64_t>(d),
                           static_cast<unsigned>(k));
  if (!total || *total != c.vertices.size()) {
    return Verdict::reject("cycle lists " + std::to_string(c.vertices.size()) +
                           " vertices but the graph has " +
                           (total ? std::to_string(*total) : "too many"));
  }

  std::vector<std::uint64_t> ranks;
  ranks.reserve(c.vertices.size());
  std::vector<bool> seen(*total, false);
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const Word& w = c.vertices[i];
    try {
      check_word(w, k, d);
    } catch (const InvalidInput& e) {
      return Verdict::reject("vertex " + std::to_string(i) + ": " + e.what());
    }
    const std::uint64_t r = word_rank(w, d);
    if (seen[r]) {
      return Verdict::reject("duplicate vertex " + render(w, d) +
                             " at position " + std::to_string(i));
    }
    seen[r] = true;
    ranks.push_back(r);
  }

  const std::size_t n = c.vertices.size();
  if (n == 1) return Verdict::accept();
  auto label = [&](const Word& w) {
    return is_grid ? render_numeric(w) : render(w, d);
  };
  std::optional<RankSpace> space;
  if (!is_grid) space.emplace(std::get<AOParams>(c.graph));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const bool ok = is_grid ? grid_adjacent(c.vertices[i], c.vertices[j])
                            : space->adjacent(ranks[i], ranks[j]);
    if (!ok) {
      return Verdict::reject("positions " + std::to_string(i) + " and " +
                             std::to_string(j) + " (" +
                             label(c.vertices[i]) + ", " +
                             label(c.vertices[j]) +
                             ") are not adjacent");
    }
  }
  return Verdict::accept();
}

Word de_bruijn_sequence(const CycleCertificate& c) {
  const auto* p = std::get_if<AOParams>(&c.graph);
  if (p == nullptr || p->s != 1) {
    throw InvalidInput("circular sequence export requires an AO cycle with s = 1");
  }
  std::vector<Letter> letters;
  letters.reserve(c.vertices.size());
  for (const Word& w : c.vertices) letters.push_back(w[0]);
  return Word(std::move(letters));
}

CycleCertificate cycle_from_circular_sequence(const Word& sequence,
                                              const AOParams& p) {
  make_params(p.k, p.d, p.s);
  if (p.s != 1) throw InvalidInput("circular sequences describe s = 1 cycles");
  check_word(sequence, sequence.size(), p.d);
  CycleCertificate cert{p, {}};
  const std::size_t n = sequence.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Letter> window;
    for (int j = 0; j < p.k; ++j) window.push_back(sequence[(i + j) % n]);
    cert.vertices.emplace_back(std::move(window));
  }
  return cert;
}

}  // namespace aoglab
