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

// Hamiltonian cycles of alphabet overlap graphs and of even grids.
//
// Every constructor here runs verify_cycle on its own output and throws
// ConstructionFailed instead of returning an invalid certificate.

#ifndef AOGLAB_HAMILTONIAN_HPP_
#define AOGLAB_HAMILTONIAN_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "aoglab/error.hpp"
#include "aoglab/words.hpp"

namespace aoglab {

// The grid {0..d-1}^k with unit-step adjacency. A grid point is stored as a
// Word whose letters are its coordinates.
struct GridParams {
  int d = 0;
  int k = 0;

  friend bool operator==(const GridParams&, const GridParams&) = default;
};

GridParams make_grid_params(int d, int k);

using CycleGraph = std::variant<AOParams, GridParams>;

struct CycleCertificate {
  CycleGraph graph;
  std::vector<Word> vertices;
};

struct ParityRefusal {
  GridParams params;
  std::string reason;
};

// Inductive insertion on the alphabet size. Starting from the one-vertex
// cycle over {a}, each new letter b is added by walking the rotation orbits
// (left rotation by s) of words containing b, ordered by how many b's they
// contain and then lexicographically. Each orbit is spliced in as the chain
// S, rot^s(S), rot^2s(S), ... right after the anchor a^s S[0..t), where S is
// the lex-smallest member carrying a b in its last s letters.
CycleCertificate insertion_hamiltonian(const AOParams& p,
                                       std::uint64_t cap = kDefaultMaxVertices);

// Eulerian circuit of the directed overlap multigraph on t-words, one edge
// per k-word from its prefix tag to its suffix tag. Hierholzer's method,
// lex-smallest unused edge first, starting at the all-zero tag. Requires
// d >= 2 and s <= floor(k/2).
CycleCertificate eulerian_hamiltonian(const AOParams& p,
                                      std::uint64_t cap = kDefaultMaxVertices);

struct DigraphDegrees {
  std::vector<std::uint64_t> in;
  std::vector<std::uint64_t> out;
  std::uint64_t edges = 0;
};

// Degrees of the directed multigraph used by eulerian_hamiltonian.
DigraphDegrees overlap_digraph_degrees(const AOParams& p,
                                       std::uint64_t cap = kDefaultMaxVertices);

// Boustrophedon extension of an explicit d x d cycle, one dimension at a time.
std::variant<CycleCertificate, ParityRefusal> grid_hamiltonian(
    const GridParams& g, std::uint64_t cap = kDefaultMaxVertices);

Verdict verify_cycle(const CycleCertificate& c);

// First letters of the cycle's words, read cyclically. Only meaningful for
// s = 1, where the result is a de Bruijn sequence.
Word de_bruijn_sequence(const CycleCertificate& c);

// The cyclic length-k windows of `sequence` as a cycle of G(k, d, 1).
CycleCertificate cycle_from_circular_sequence(const Word& sequence,
                                              const AOParams& p);

}  // namespace aoglab

#endif  // AOGLAB_HAMILTONIAN_HPP_
