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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wlhom/big_count.hpp"
#include "wlhom/tree.hpp"
#include "wlhom/wl.hpp"

namespace wlhom {

enum class CertificateMode { tree, single_node, equivalent };

std::string_view to_string(CertificateMode mode);

struct HistogramRow {
  Rank rank = 0;
  std::size_t g1 = 0;
  std::size_t g2 = 0;

  friend bool operator==(const HistogramRow&, const HistogramRow&) = default;
};

/// Transcript of one synthesis run.
///
/// For mode == tree: `tree` has depth `level` and its homomorphism counts into
/// the two graphs are count_g1 != count_g2. `m_per_level[i]` is the parameter
/// used when lifting from level i+1 to level i+2; `n_final` is the number of
/// copies glued at the root of the emitted tree. `histograms` holds the
/// level-`level` label counts of both graphs.
///
/// For mode == single_node: the tree is one node and the counts are the two
/// vertex counts; `level` is 0 and the histogram is the level-0 one.
///
/// For mode == equivalent: only the mode is set.
struct Certificate {
  CertificateMode mode = CertificateMode::equivalent;
  std::size_t level = 0;
  std::vector<std::uint64_t> m_per_level;
  std::uint64_t n_final = 0;
  std::optional<ParsedTree> tree;
  BigCount count_g1 = 0;
  BigCount count_g2 = 0;
  std::vector<HistogramRow> histograms;
};

/// JSON text, two-space indented, newline terminated. Counts are decimal
/// strings and the tree is embedded in the tree text format.
std::string serialize_certificate(const Certificate& cert);

/// Throws ParseError on malformed JSON, unknown or missing fields, or fields
/// present that the mode does not allow.
Certificate parse_certificate(std::string_view text);

Certificate load_certificate(const std::string& path);

}  // namespace wlhom
