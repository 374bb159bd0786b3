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

#include "aoglab/serialize.hpp"

#include "aoglab/coloring.hpp"
#include "aoglab/domination.hpp"
#include "aoglab/hamiltonian.hpp"
#include "aoglab/planarity.hpp"

namespace aoglab {

namespace {

// Wraps nlohmann exceptions so callers only see InvalidInput.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

Json words_to_json(const std::vector<Word>& words, int d) {
  auto out = Json::array();
  for (const Word& w : words) out.push_back(render(w, d));
  return out;
}

std::vector<Word> words_from_json(const Json& array, const AOParams& p) {
  std::vector<Word> out;
  for (const auto& item : array) {
    out.push_back(parse_word(item.get<std::string>(), p.k, p.d));
  }
  return out;
}

void check_schema(const Json& doc) {
  if (doc.contains("schema") && doc.at("schema").get<int>() != kSchemaVersion) {
    throw InvalidInput("unsupported schema version");
  }
}

}  // namespace

Json to_json(const AOParams& p) {
  Json doc;
  doc["k"] = p.k;
  doc["d"] = p.d;
  doc["s"] = p.s;
  return doc;
}

AOParams params_from_json(const Json& doc) {
  return guarded("params", [&] {
    return make_params(doc.at("k").get<int>(), doc.at("d").get<int>(),
                       doc.at("s").get<int>());
  });
}

Json to_json(const GridParams& g) {
  Json doc;
  doc["d"] = g.d;
  doc["dim"] = g.k;
  return doc;
}

GridParams grid_params_from_json(const Json& doc) {
  return guarded("grid params", [&] {
    return make_grid_params(doc.at("d").get<int>(), doc.at("dim").get<int>());
  });
}

Json to_json(const CycleCertificate& c) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  auto cycle = Json::array();
  if (const auto* g = std::get_if<GridParams>(&c.graph)) {
    doc["kind"] = "grid";
    doc["params"] = to_json(*g);
    for (const Word& w : c.vertices) cycle.push_back(render_numeric(w));
  } else {
    const auto& p = std::get<AOParams>(c.graph);
    doc["kind"] = "ao";
    doc["params"] = to_json(p);
    cycle = words_to_json(c.vertices, p.d);
  }
  doc["cycle"] = std::move(cycle);
  return doc;
}

CycleCertificate cycle_from_json(const Json& doc) {
  return guarded("cycle certificate", [&] {
    check_schema(doc);
    const std::string kind = doc.at("kind").get<std::string>();
    CycleCertificate c;
    if (kind == "grid") {
      const GridParams g = grid_params_from_json(doc.at("params"));
      c.graph = g;
      for (const auto& item : doc.at("cycle")) {
        c.vertices.push_back(parse_word(item.get<std::string>()));
      }
    } else if (kind == "ao") {
      const AOParams p = params_from_json(doc.at("params"));
      c.graph = p;
      c.vertices = words_from_json(doc.at("cycle"), p);
    } else {
      throw InvalidInput("unknown cycle kind '" + kind + "'");
    }
    return c;
  });
}

std::string cycle_to_text(const CycleCertificate& c) {
  std::string out;
  const bool grid = std::holds_alternative<GridParams>(c.graph);
  const int d = grid ? 0 : std::get<AOParams>(c.graph).d;
  for (const Word& w : c.vertices) {
    out += grid ? render_numeric(w) : render(w, d);
    out += '\n';
  }
  return out;
}

Json to_json(const Coloring& c) {
  if (!c.params) throw InvalidInput("coloring has no AO parameters");
  const AOParams& p = *c.params;
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["params"] = to_json(p);
  doc["palette"] = c.palette;
  Json colors = Json::object();
  for (std::uint64_t r = 0; r < c.colors.size(); ++r) {
    colors[render(word_from_rank(r, p.k, p.d), p.d)] = c.colors[r];
  }
  doc["colors"] = std::move(colors);
  return doc;
}

Json to_json(const Coloring& c, const ExplicitGraph& g) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["palette"] = c.palette;
  Json colors = Json::object();
  for (std::size_t v = 0; v < c.colors.size() && v < g.vertex_count(); ++v) {
    colors[g.labels()[v]] = c.colors[v];
  }
  doc["colors"] = std::move(colors);
  return doc;
}

Coloring coloring_from_json(const Json& doc) {
  return guarded("coloring", [&] {
    check_schema(doc);
    Coloring c;
    const AOParams p = params_from_json(doc.at("params"));
    c.params = p;
    c.palette = doc.at("palette").get<std::uint32_t>();
    const std::uint64_t n = vertex_count(p);
    // missing entries stay out of range so the verifier reports them
    c.colors.assign(n, UINT32_MAX);
    for (const auto& [label, color] : doc.at("colors").items()) {
      const Word w = parse_word(label, p.k, p.d);
      c.colors[word_rank(w, p.d)] = color.get<std::uint32_t>();
    }
    return c;
  });
}

Json to_json(const ChromaticReport& r) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["params"] = to_json(r.params);
  doc["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  doc["lower"] = r.lower;
  doc["upper"] = r.upper;
  if (r.single_step_bound) doc["single_step_bound"] = *r.single_step_bound;
  if (r.recursive_bound) doc["recursive_bound"] = *r.recursive_bound;
  if (r.closed_form) doc["closed_form"] = *r.closed_form;
  if (r.oracle) doc["oracle"] = *r.oracle;
  doc["notes"] = r.notes;
  return doc;
}

Json to_json(const DominatingSet& ds) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["params"] = to_json(ds.params);
  doc["members"] = words_to_json(ds.members, ds.params.d);
  return doc;
}

DominatingSet dominating_set_from_json(const Json& doc) {
  return guarded("dominating set", [&] {
    check_schema(doc);
    const AOParams p = params_from_json(doc.at("params"));
    return DominatingSet{p, words_from_json(doc.at("members"), p)};
  });
}

Json to_json(const BipartiteWitness& w) {
  Json doc;
  doc["left"] = words_to_json(w.left, w.params.d);
  doc["right"] = words_to_json(w.right, w.params.d);
  return doc;
}

BipartiteWitness witness_from_json(const Json& doc, const AOParams& p) {
  return guarded("witness", [&] {
    return BipartiteWitness{p, words_from_json(doc.at("left"), p),
                            words_from_json(doc.at("right"), p)};
  });
}

Json to_json(const PlanarityVerdict& v) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["params"] = to_json(v.params);
  doc["status"] = to_string(v.status);
  if (v.witness) doc["witness"] = to_json(*v.witness);
  if (v.embedding) {
    const ExplicitGraph g = materialize(v.params);
    Json embedding = Json::object();
    for (std::size_t u = 0; u < v.embedding->size(); ++u) {
      auto order = Json::array();
      for (auto w : (*v.embedding)[u]) order.push_back(g.labels()[w]);
      embedding[g.labels()[u]] = std::move(order);
    }
    doc["embedding"] = std::move(embedding);
  }
  doc["reason"] = v.reason;
  return doc;
}

PlanarityVerdict planarity_verdict_from_json(const Json& doc) {
  return guarded("planarity verdict", [&] {
    check_schema(doc);
    PlanarityVerdict v;
    v.params = params_from_json(doc.at("params"));
    const std::string status = doc.at("status").get<std::string>();
    if (status == "planar") {
      v.status = PlanarityStatus::kPlanar;
    } else if (status == "nonplanar") {
      v.status = PlanarityStatus::kNonPlanar;
    } else if (status == "unknown") {
      v.status = PlanarityStatus::kUnknown;
    } else {
      throw InvalidInput("unknown planarity status '" + status + "'");
    }
    if (doc.contains("witness")) {
      v.witness = witness_from_json(doc.at("witness"), v.params);
    }
    if (doc.contains("embedding")) {
      const ExplicitGraph g = materialize(v.params);
      RotationSystem rotation(g.vertex_count());
      for (const auto& [label, order] : doc.at("embedding").items()) {
        const auto u = g.index_of(render(parse_word(label, v.params.k, v.params.d),
                                         v.params.d));
        if (!u) throw InvalidInput("unknown embedding vertex " + label);
        for (const auto& item : order) {
          const auto w = g.index_of(render(
              parse_word(item.get<std::string>(), v.params.k, v.params.d),
              v.params.d));
          if (!w) throw InvalidInput("unknown embedding neighbor");
          rotation[*u].push_back(*w);
        }
      }
      v.embedding = std::move(rotation);
    }
    if (doc.contains("reason")) v.reason = doc.at("reason").get<std::string>();
    return v;
  });
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace aoglab
