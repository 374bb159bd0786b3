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

#include "aoglab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "aoglab/coloring.hpp"
#include "aoglab/domination.hpp"
#include "aoglab/error.hpp"
#include "aoglab/graph.hpp"
#include "aoglab/hamiltonian.hpp"
#include "aoglab/planarity.hpp"
#include "aoglab/serialize.hpp"

namespace aoglab::cli {

namespace {

struct CommandConfig {
  int k = 0;
  int d = 0;
  int s = 0;
  int dim = 0;
  std::string method;
  std::string format = "json";
  std::string input;
  std::string out;
  std::string anchor;
  std::string check;
  bool oracle = false;
  bool force = false;
};

struct Limits {
  std::uint64_t vertices = kDefaultMaxVertices;
  std::size_t chromatic_oracle = kDefaultChromaticOracleMax;
  std::size_t domination_oracle = kDefaultDominationOracleMax;
};

// What a command produced: the document and the exit status to report.
struct Outcome {
  std::string text;
  int status = kOk;
};

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Limits resolve_limits(const CommandConfig& config, std::ostream& err) {
  Limits limits;
  if (const char* env = std::getenv("AOGLAB_MAX_VERTICES")) {
    std::string_view text(env);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
      throw InvalidInput("AOGLAB_MAX_VERTICES must be a positive integer");
    }
    limits.vertices = value;
  }
  if (config.force) {
    err << "warning: --force lifts the size guards; the oracles stay capped "
           "by their 64-bit set representation\n";
    limits.vertices = std::numeric_limits<std::uint64_t>::max();
    limits.chromatic_oracle = 64;
    limits.domination_oracle = 63;
  }
  return limits;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json with_class_sizes(Json doc, const Coloring& c) {
  std::vector<std::uint64_t> sizes(c.palette, 0);
  for (auto color : c.colors) ++sizes.at(color);
  doc["class_sizes"] = sizes;
  return doc;
}

Outcome run_build(const CommandConfig& config, const Limits& limits) {
  const AOParams p = make_params(config.k, config.d, config.s);
  const ExplicitGraph g = materialize(p, limits.vertices);
  if (config.format == "dot") return {to_dot(g)};
  if (config.format == "edges") return {to_edge_list(g)};
  return {dump(to_json(g))};
}

Outcome run_hamilton(const CommandConfig& config, const Limits& limits) {
  const AOParams p = make_params(config.k, config.d, config.s);
  const CycleCertificate cert = config.method == "eulerian"
                                    ? eulerian_hamiltonian(p, limits.vertices)
                                    : insertion_hamiltonian(p, limits.vertices);
  if (Verdict v = verify_cycle(cert); !v) {
    throw ConstructionFailed(v.reason());
  }
  if (config.format == "text") return {cycle_to_text(cert)};
  if (config.format == "sequence") {
    return {render(de_bruijn_sequence(cert), p.d) + "\n"};
  }
  return {dump(to_json(cert))};
}

Outcome run_grid(const CommandConfig& config, const Limits& limits) {
  const GridParams g = make_grid_params(config.d, config.dim);
  auto result = grid_hamiltonian(g, limits.vertices);
  if (auto* refusal = std::get_if<ParityRefusal>(&result)) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "grid";
    doc["params"] = to_json(g);
    doc["refusal"] = refusal->reason;
    return {dump(doc), kRejected};
  }
  const auto& cert = std::get<CycleCertificate>(result);
  if (Verdict v = verify_cycle(cert); !v) throw ConstructionFailed(v.reason());
  if (config.format == "text") return {cycle_to_text(cert)};
  return {dump(to_json(cert))};
}

Outcome run_color(const CommandConfig& config, const Limits& limits) {
  const AOParams p = make_params(config.k, config.d, config.s);
  Coloring c;
  if (config.method == "recursive") {
    c = recursive_coloring(p, limits.vertices);
  } else if (config.method == "oracle") {
    guarded_count(p.d, p.k, limits.chromatic_oracle);
    c = minimum_coloring(materialize(p, limits.vertices), limits.chromatic_oracle);
    c.params = p;
  } else {
    c = theorem3_coloring(p, limits.vertices);
  }
  if (Verdict v = verify_coloring(c); !v) throw ConstructionFailed(v.reason());
  return {dump(with_class_sizes(to_json(c), c))};
}

Outcome run_chromatic(const CommandConfig& config, const Limits& limits) {
  const AOParams p = make_params(config.k, config.d, config.s);
  ChromaticReportOptions options;
  options.use_oracle = config.oracle;
  options.oracle_max_vertices = limits.chromatic_oracle;
  options.cap = limits.vertices;
  return {dump(to_json(chromatic_report(p, options)))};
}

Outcome run_dominate(const CommandConfig& config, const Limits& limits) {
  const AOParams p = make_params(config.k, config.d, config.s);
  std::optional<Word> anchor;
  if (!config.anchor.empty()) anchor = parse_word(config.anchor, p.s, p.d);
  const DominatingSet ds = dominating_set_construct(p, anchor, limits.vertices);
  if (Verdict v = verify_dominating(ds, limits.vertices); !v) {
    throw ConstructionFailed(v.reason());
  }
  Json doc = to_json(ds);
  doc["size"] = ds.members.size();
  if (config.oracle) {
    guarded_count(p.d, p.k, limits.domination_oracle);
    const ExplicitGraph g = materialize(p, limits.vertices);
    const auto best = minimum_dominating_set(g, limits.domination_oracle);
    Json oracle;
    oracle["domination_number"] = best.size();
    auto members = Json::array();
    for (auto v : best) members.push_back(g.labels()[v]);
    oracle["members"] = std::move(members);
    doc["oracle"] = std::move(oracle);
  }
  return {dump(doc)};
}

Outcome run_planarity(const CommandConfig& config) {
  const AOParams p = make_params(config.k, config.d, config.s);
  return {dump(to_json(classify_planarity(p)))};
}

Outcome run_verify(const CommandConfig& config, const Limits& limits) {
  const Json input = parse_json(read_file(config.input));
  Verdict verdict = Verdict::reject("nothing to verify");
  if (config.check == "cycle") {
    verdict = verify_cycle(cycle_from_json(input));
  } else if (config.check == "coloring") {
    verdict = verify_coloring(coloring_from_json(input));
  } else if (config.check == "dominating") {
    verdict = verify_dominating(dominating_set_from_json(input), limits.vertices);
  } else {
    const PlanarityVerdict pv = planarity_verdict_from_json(input);
    if (pv.status == PlanarityStatus::kNonPlanar && pv.witness) {
      verdict = verify_witness(*pv.witness);
    } else if (pv.status == PlanarityStatus::kPlanar && pv.embedding) {
      verdict = verify_embedding(materialize(pv.params, limits.vertices),
                                 *pv.embedding);
    } else {
      verdict = Verdict::reject("document carries no witness or embedding");
    }
  }
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["check"] = config.check;
  doc["accepted"] = verdict.accepted();
  if (!verdict.accepted()) doc["reason"] = verdict.reason();
  return {dump(doc), verdict.accepted() ? kOk : kRejected};
}

void add_ao_flags(CLI::App* sub, CommandConfig& config) {
  sub->add_option("--k", config.k, "word length")->required();
  sub->add_option("--d", config.d, "alphabet size")->required();
  sub->add_option("--s", config.s, "shift (tag length is k - s)")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CommandConfig config;
  CLI::App app{"Constructions and certificates for alphabet overlap graphs",
               "aoglab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", config.out, "write the document to FILE");
  app.add_flag("--force", config.force, "lift the vertex size guards");

  auto* build = app.add_subcommand("build", "materialize and export G(k,d,s)");
  add_ao_flags(build, config);
  build->add_option("--format", config.format)
      ->check(CLI::IsMember({"json", "dot", "edges"}));

  auto* hamilton = app.add_subcommand("hamilton", "Hamiltonian cycle of G(k,d,s)");
  add_ao_flags(hamilton, config);
  config.method = "insertion";
  hamilton->add_option("--method", config.method)
      ->check(CLI::IsMember({"insertion", "eulerian"}));
  hamilton->add_option("--format", config.format)
      ->check(CLI::IsMember({"json", "text", "sequence"}));

  auto* grid = app.add_subcommand("grid-ham", "Hamiltonian cycle of {1..d}^dim");
  grid->add_option("--d", config.d, "side length")->required();
  grid->add_option("--dim", config.dim, "dimension")->required();
  grid->add_option("--format", config.format)
      ->check(CLI::IsMember({"json", "text"}));

  auto* color = app.add_subcommand("color", "proper coloring of G(k,d,s)");
  add_ao_flags(color, config);
  color->add_option("--method", config.method)
      ->check(CLI::IsMember({"theorem3", "recursive", "oracle"}));

  auto* chromatic = app.add_subcommand("chromatic", "chromatic number report");
  add_ao_flags(chromatic, config);
  chromatic->add_flag("--oracle", config.oracle, "run the exact oracle");

  auto* dominate = app.add_subcommand("dominate", "dominating set of size d^t");
  add_ao_flags(dominate, config);
  dominate->add_flag("--oracle", config.oracle, "also run the exact oracle");
  dominate->add_option("--anchor", config.anchor, "suffix word of length s");

  auto* planarity = app.add_subcommand("planarity", "planarity verdict");
  add_ao_flags(planarity, config);

  auto* verify = app.add_subcommand("verify", "check a certificate document");
  verify->add_option("kind", config.check)
      ->required()
      ->check(CLI::IsMember({"cycle", "coloring", "dominating", "witness"}));
  verify->add_option("--input", config.input, "certificate JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    const Limits limits = resolve_limits(config, err);
    Outcome outcome;
    if (app.got_subcommand(build)) {
      outcome = run_build(config, limits);
    } else if (app.got_subcommand(hamilton)) {
      outcome = run_hamilton(config, limits);
    } else if (app.got_subcommand(grid)) {
      outcome = run_grid(config, limits);
    } else if (app.got_subcommand(color)) {
      outcome = run_color(config, limits);
    } else if (app.got_subcommand(chromatic)) {
      outcome = run_chromatic(config, limits);
    } else if (app.got_subcommand(dominate)) {
      outcome = run_dominate(config, limits);
    } else if (app.got_subcommand(planarity)) {
      outcome = run_planarity(config);
    } else {
      outcome = run_verify(config, limits);
    }

    if (config.out.empty()) {
      out << outcome.text;
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw InvalidInput("cannot open output file '" + config.out + "'");
      file << outcome.text;
    }
    return outcome.status;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const SizeGuardExceeded& e) {
    err << "error: " << e.what() << " (use --force or AOGLAB_MAX_VERTICES)\n";
    return kSizeGuard;
  } catch (const ConstructionFailed& e) {
    err << "error: " << e.what() << "\n";
    return kRejected;
  }
}

}  // namespace aoglab::cli
