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

#include "wlhom/certificate.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wlhom/errors.hpp"

namespace wlhom {

using Json = nlohmann::ordered_json;

std::string_view to_string(CertificateMode mode) {
  switch (mode) {
    case CertificateMode::tree:
      return "tree";
    case CertificateMode::single_node:
      return "single-node";
    case CertificateMode::equivalent:
      return "equivalent";
  }
  return "?";
}

std::string serialize_certificate(const Certificate& cert) {
  Json j;
  j["mode"] = std::string(to_string(cert.mode));
  if (cert.mode != CertificateMode::equivalent) {
    if (!cert.tree) throw InvalidArgument("certificate in mode " + std::string(to_string(cert.mode)) + " has no tree");
    j["level"] = cert.level;
    j["m_per_level"] = cert.m_per_level;
    j["n_final"] = cert.n_final;
    j["tree"] = serialize_tree(cert.tree->arena, cert.tree->root);
    j["count_g1"] = to_decimal(cert.count_g1);
    j["count_g2"] = to_decimal(cert.count_g2);
    Json rows = Json::array();
    for (const auto& row : cert.histograms) rows.push_back({{"rank", row.rank}, {"g1", row.g1}, {"g2", row.g2}});
    j["histograms"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError(0, "malformed certificate: " + what); }

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

std::uint64_t natural(const Json& j, const char* name) {
  if (!j.is_number_unsigned()) malformed(std::string("field '") + name + "' must be a natural number");
  return j.get<std::uint64_t>();
}

BigCount decimal(const Json& j, const char* name) {
  BigCount out;
  if (!j.is_string() || !parse_decimal(j.get<std::string>(), out)) {
    malformed(std::string("field '") + name + "' must be a decimal string");
  }
  return out;
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  if (!j.is_object()) malformed("top level must be an object");

  Certificate cert;
  const Json& mode = field(j, "mode");
  if (mode == "tree") {
    cert.mode = CertificateMode::tree;
  } else if (mode == "single-node") {
    cert.mode = CertificateMode::single_node;
  } else if (mode == "equivalent") {
    cert.mode = CertificateMode::equivalent;
  } else {
    malformed("unknown mode");
  }

  if (cert.mode == CertificateMode::equivalent) {
    if (j.size() != 1) malformed("an equivalent-mode certificate carries only 'mode'");
    return cert;
  }

  static const std::set<std::string> known{"mode",     "level",    "m_per_level", "n_final",
                                           "tree",     "count_g1", "count_g2",    "histograms"};
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) malformed("unknown field '" + key + "'");
  }

  cert.level = natural(field(j, "level"), "level");
  const Json& ms = field(j, "m_per_level");
  if (!ms.is_array()) malformed("field 'm_per_level' must be an array");
  for (const auto& m : ms) cert.m_per_level.push_back(natural(m, "m_per_level"));
  cert.n_final = natural(field(j, "n_final"), "n_final");

  const Json& tree = field(j, "tree");
  if (!tree.is_string()) malformed("field 'tree' must be a string");
  try {
    cert.tree = parse_tree(tree.get<std::string>());
  } catch (const ParseError& e) {
    malformed("embedded tree: " + std::string(e.what()));
  }

  cert.count_g1 = decimal(field(j, "count_g1"), "count_g1");
  cert.count_g2 = decimal(field(j, "count_g2"), "count_g2");

  const Json& rows = field(j, "histograms");
  if (!rows.is_array()) malformed("field 'histograms' must be an array");
  for (const auto& row : rows) {
    if (!row.is_object() || row.size() != 3) malformed("histogram rows are {rank, g1, g2}");
    const auto rank = natural(field(row, "rank"), "rank");
    if (rank > std::numeric_limits<Rank>::max()) malformed("histogram rank out of range");
    cert.histograms.push_back({static_cast<Rank>(rank), natural(field(row, "g1"), "g1"),
                               natural(field(row, "g2"), "g2")});
  }
  return cert;
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open certificate file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_certificate(buffer.str());
}

}  // namespace wlhom
