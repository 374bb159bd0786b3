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

// JSON and plain-text documents for parameters and certificates. Every
// top-level document carries "schema": 1. Readers throw InvalidInput on
// malformed input.

#ifndef AOGLAB_SERIALIZE_HPP_
#define AOGLAB_SERIALIZE_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

namespace aoglab {

struct AOParams;
struct GridParams;
struct CycleCertificate;
struct Coloring;
struct ChromaticReport;
struct DominatingSet;
struct BipartiteWitness;
struct PlanarityVerdict;
class ExplicitGraph;

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const AOParams& p);
AOParams params_from_json(const Json& doc);
Json to_json(const GridParams& g);
GridParams grid_params_from_json(const Json& doc);

// {"schema":1,"kind":"ao"|"grid","params":{...},"cycle":["aab",...]}.
// Grid points are written as comma-separated coordinates.
Json to_json(const CycleCertificate& c);
CycleCertificate cycle_from_json(const Json& doc);
// One vertex per line.
std::string cycle_to_text(const CycleCertificate& c);

// {"schema":1,"params":{...},"palette":n,"colors":{"aab":2,...}}
Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& doc);
// Colors keyed by the graph's vertex labels.
Json to_json(const Coloring& c, const ExplicitGraph& g);

Json to_json(const ChromaticReport& r);

// {"schema":1,"params":{...},"members":["aa","ba"]}
Json to_json(const DominatingSet& ds);
DominatingSet dominating_set_from_json(const Json& doc);

Json to_json(const BipartiteWitness& w);
BipartiteWitness witness_from_json(const Json& doc, const AOParams& p);

// {"schema":1,"params":{...},"status":"nonplanar","witness":{...}} or
// {"schema":1,"params":{...},"status":"planar","embedding":{"aa":[...]}}
Json to_json(const PlanarityVerdict& v);
PlanarityVerdict planarity_verdict_from_json(const Json& doc);

Json parse_json(std::string_view text);

}  // namespace aoglab

#endif  // AOGLAB_SERIALIZE_HPP_
