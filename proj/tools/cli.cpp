// Copyright 2026 The wlhom Authors
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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "wlhom/certificate.hpp"
#include "wlhom/errors.hpp"
#include "wlhom/graph.hpp"
#include "wlhom/hom.hpp"
#include "wlhom/synthesizer.hpp"
#include "wlhom/tree.hpp"
#include "wlhom/wl.hpp"

namespace wlhom::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::vector<std::string> inputs;
  std::size_t max_level = 0;
  std::size_t max_nodes = 100'000;
  std::string out_path;
  bool json = false;
};

void emit(const std::string& text, const Config& config, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw ParseError(0, "cannot write '" + config.out_path + "'");
  file << text;
}

Json histogram_json(const std::array<Histogram, 2>& pair) {
  std::map<Rank, std::pair<std::size_t, std::size_t>> rows;
  for (auto [r, c] : pair[0]) rows[r].first = c;
  for (auto [r, c] : pair[1]) rows[r].second = c;
  Json out = Json::array();
  for (auto [r, c] : rows) out.push_back({{"rank", r}, {"g1", c.first}, {"g2", c.second}});
  return out;
}

int cmd_compare(const Config& config, std::optional<std::size_t> max_level, std::ostream& out) {
  const Graph g1 = load_graph(config.inputs.at(0));
  const Graph g2 = load_graph(config.inputs.at(1));
  const WlComparison cmp = distinguishing_level(g1, g2, max_level);

  if (config.json) {
    Json j;
    j["verdict"] = cmp.distinguishing_level ? "distinguished" : "equivalent";
    if (cmp.distinguishing_level) j["level"] = *cmp.distinguishing_level;
    if (cmp.stabilized) j["stabilization_level"] = cmp.stabilization_level;
    Json levels = Json::array();
    for (const auto& pair : cmp.histograms) levels.push_back(histogram_json(pair));
    j["histograms"] = std::move(levels);
    out << j.dump(2) << '\n';
  } else if (cmp.distinguishing_level) {
    out << "distinguished at level " << *cmp.distinguishing_level << '\n';
  } else if (cmp.stabilized) {
    out << "WL-equivalent (stable at round " << cmp.stabilization_level << ")\n";
  } else {
    out << "not distinguished up to level " << cmp.histograms.size() - 1 << " (not yet stable)\n";
  }
  return cmp.distinguishing_level ? kOk : kNegative;
}

int cmd_labels(const Config& config, std::optional<std::size_t> max_level, std::ostream& out) {
  const Graph g = load_graph(config.inputs.at(0));
  const LabelTable table =
      joint_refine(g, Graph{}, max_level.value_or(std::max<std::size_t>(g.vertex_count(), 1)), !max_level);

  if (config.json) {
    Json levels = Json::array();
    for (std::size_t k = 0; k < table.level_count(); ++k) {
      levels.push_back({{"level", k}, {"ranks", table.level(k).vertex_rank[0]}});
    }
    Json j;
    j["levels"] = std::move(levels);
    if (table.stabilization_level()) j["stabilization_level"] = *table.stabilization_level();
    out << j.dump(2) << '\n';
    return kOk;
  }
  for (std::size_t k = 0; k < table.level_count(); ++k) {
    out << "level " << k << ':';
    for (Rank r : table.level(k).vertex_rank[0]) out << ' ' << r;
    out << '\n';
  }
  return kOk;
}

int cmd_hom_count(const Config& config, std::ostream& out) {
  const ParsedTree tree = load_tree(config.inputs.at(0));
  const Graph g = load_graph(config.inputs.at(1));
  const auto rooted = rooted_hom(tree.arena, tree.root, g);
  BigCount total = 0;
  for (const auto& c : rooted) total += c;

  if (config.json) {
    Json j;
    j["count"] = to_decimal(total);
    Json per_vertex = Json::array();
    for (const auto& c : rooted) per_vertex.push_back(to_decimal(c));
    j["rooted"] = std::move(per_vertex);
    out << j.dump(2) << '\n';
  } else {
    out << to_decimal(total) << '\n';
  }
  return kOk;
}

std::uint64_t lift_ceiling_from_env() {
  const char* raw = std::getenv("WLHOM_LIFT_CEILING");
  if (raw == nullptr) return kDefaultLiftCeiling;
  BigCount value;
  if (!parse_decimal(raw, value) || value == 0 || !value.fits_ulong_p()) {
    throw ParseError(0, std::string("WLHOM_LIFT_CEILING must be a positive integer, got '") + raw + "'");
  }
  return value.get_ui();
}

int cmd_synthesize(const Config& config, std::optional<std::size_t> max_level, std::ostream& out,
                   std::ostream& err) {
  const Graph g1 = load_graph(config.inputs.at(0));
  const Graph g2 = load_graph(config.inputs.at(1));
  SynthesisOptions options;
  options.max_level = max_level;
  options.lift_ceiling = lift_ceiling_from_env();

  const Certificate cert = synthesize(g1, g2, options);
  emit(serialize_certificate(cert), config, out);

  std::ostream& summary = config.out_path.empty() ? err : out;
  summary << "mode: " << to_string(cert.mode);
  if (cert.mode != CertificateMode::equivalent) {
    summary << ", level " << cert.level << ", n = " << cert.n_final << ", counts " << to_decimal(cert.count_g1)
            << " vs " << to_decimal(cert.count_g2);
  }
  summary << '\n';
  return cert.mode == CertificateMode::equivalent ? kNegative : kOk;
}

int cmd_verify(const Config& config, std::ostream& out) {
  std::optional<Certificate> cert;
  std::string reason;
  try {
    cert = load_certificate(config.inputs.at(0));
  } catch (const ParseError& e) {
    reason = e.what();
  }
  const Graph g1 = load_graph(config.inputs.at(1));
  const Graph g2 = load_graph(config.inputs.at(2));
  if (cert && verify(*cert, g1, g2)) {
    out << "certificate verified (" << to_string(cert->mode) << ")\n";
    return kOk;
  }
  out << "certificate rejected" << (reason.empty() ? "" : ": " + reason) << '\n';
  return kNegative;
}

int cmd_expand(const Config& config, std::ostream& out, std::ostream& err) {
  const Certificate cert = load_certificate(config.inputs.at(0));
  if (!cert.tree) {
    err << "certificate in mode " << to_string(cert.mode) << " has no tree\n";
    return kNegative;
  }
  try {
    const ExplicitTree tree = expand_tree(cert.tree->arena, cert.tree->root, config.max_nodes);
    emit(serialize_explicit(tree), config, out);
  } catch (const TreeTooLarge& e) {
    err << "refusing to expand: " << e.what() << '\n';
    return kNegative;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weisfeiler-Leman test, tree homomorphism counts and distinguishing-tree certificates", "wlhom"};
  app.require_subcommand(1);
  Config config;

  auto add_max_level = [&](CLI::App* cmd) {
    return cmd->add_option("--max-level", config.max_level, "Refinement depth limit");
  };

  auto* compare = app.add_subcommand("compare", "Run the WL test on two graphs");
  compare->add_option("graphs", config.inputs, "Two graph files")->required()->expected(2);
  auto* compare_level = add_max_level(compare);
  compare->add_flag("--json", config.json, "Machine-readable output");

  auto* labels = app.add_subcommand("labels", "Print per-vertex WL ranks of one graph");
  labels->add_option("graph", config.inputs, "Graph file")->required()->expected(1);
  auto* labels_level = add_max_level(labels);
  labels->add_flag("--json", config.json, "Machine-readable output");

  auto* hom = app.add_subcommand("hom-count", "Count homomorphisms from a tree into a graph");
  hom->add_option("files", config.inputs, "Tree file, graph file")->required()->expected(2);
  hom->add_flag("--json", config.json, "Also print per-vertex rooted counts");

  auto* synth = app.add_subcommand("synthesize", "Build a distinguishing tree and certificate");
  synth->add_option("graphs", config.inputs, "Two graph files")->required()->expected(2);
  auto* synth_level = add_max_level(synth);
  synth->add_option("--out", config.out_path, "Write the certificate here instead of stdout");

  auto* check = app.add_subcommand("verify", "Independently check a certificate");
  check->add_option("files", config.inputs, "Certificate, graph 1, graph 2")->required()->expected(3);

  auto* expand = app.add_subcommand("expand", "Write a certificate's tree in explicit form");
  expand->add_option("certificate", config.inputs, "Certificate file")->required()->expected(1);
  expand->add_option("--max-nodes", config.max_nodes, "Refuse trees larger than this")->capture_default_str();
  expand->add_option("--out", config.out_path, "Write here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  auto level_of = [&](CLI::Option* opt) -> std::optional<std::size_t> {
    return opt->count() > 0 ? std::optional{config.max_level} : std::nullopt;
  };

  try {
    if (compare->parsed()) return cmd_compare(config, level_of(compare_level), out);
    if (labels->parsed()) return cmd_labels(config, level_of(labels_level), out);
    if (hom->parsed()) return cmd_hom_count(config, out);
    if (synth->parsed()) return cmd_synthesize(config, level_of(synth_level), out, err);
    if (check->parsed()) return cmd_verify(config, out);
    if (expand->parsed()) return cmd_expand(config, out, err);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace wlhom::cli
