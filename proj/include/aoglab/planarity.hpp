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

// Planarity of G(k, d, s) in the regime t <= k/2.
//
// Non-planar graphs are certified by a complete bipartite subgraph (K3,3 or
// K4,4) checked edge by edge. The planar cases G(2,2,1) and G(2,3,1) are
// certified by stored rotation systems whose face count satisfies Euler's
// formula.

#ifndef AOGLAB_PLANARITY_HPP_
#define AOGLAB_PLANARITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aoglab/error.hpp"
#include "aoglab/graph.hpp"
#include "aoglab/words.hpp"

namespace aoglab {

struct BipartiteWitness {
  AOParams params;
  std::vector<Word> left;
  std::vector<Word> right;
};

// Clockwise neighbor order around each vertex of an ExplicitGraph.
using RotationSystem = std::vector<std::vector<std::uint32_t>>;

enum class PlanarityStatus { kPlanar, kNonPlanar, kUnknown };

std::string to_string(PlanarityStatus status);

struct PlanarityVerdict {
  AOParams params;
  PlanarityStatus status = PlanarityStatus::kUnknown;
  std::optional<BipartiteWitness> witness;
  // Over materialize(params).
  std::optional<RotationSystem> embedding;
  std::string reason;
};

PlanarityVerdict classify_planarity(const AOParams& p);

// Left {a w b, a w c, a w e}, right {b w a, c w a, e w a} for the four
// lex-smallest tags a < b < c < e and w = 0^(k-2t). Needs t <= k/2, d^t >= 4.
BipartiteWitness k33_witness(const AOParams& p);

// For t = 1, k >= 3, d >= 2: words whose first and last letters agree
// against words whose first and last letters differ, over letters {a, b}
// and two middle words. Matches the classes {101,111,010,000} /
// {110,100,001,011} for G(3,2,2).
BipartiteWitness k44_witness(const AOParams& p);

Verdict verify_witness(const BipartiteWitness& w);

// Checks that `rotation` permutes each vertex's neighbors and that every
// connected component satisfies V - E + F = 2 under face tracing.
Verdict verify_embedding(const ExplicitGraph& g, const RotationSystem& rotation);

// Number of faces traced from the rotation system (isolated vertices
// contribute one face each).
std::size_t count_faces(const ExplicitGraph& g, const RotationSystem& rotation);

// Stored embeddings for the planar graphs: G(2,2,1), G(2,3,1), and any d = 1
// graph. Throws InvalidInput otherwise.
RotationSystem planar_fixture(const AOParams& p);

}  // namespace aoglab

#endif  // AOGLAB_PLANARITY_HPP_
