// Copyright 2026 The hyrec Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text, CSV and JSON renderings of matrices, hypergraphs, plans and verdicts.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyrec/consistency.hpp"
#include "hyrec/hypergraph.hpp"
#include "hyrec/reconstruct.hpp"
#include "hyrec/words.hpp"

namespace hyrec::io {

using Json = nlohmann::ordered_json;

enum class OutputFormat { lines, csv, json, edges };

/// "lines" | "csv" | "json" | "edges"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

std::string to_csv(const BinaryMatrix& a);

/// {"n", "m", "h", "rows": [...]}; `h` is null for matrices with unequal rows
/// or no rows.
Json matrix_json(const BinaryMatrix& a);

Json plan_json(const Reconstruction& r);

/// Matrix JSON with the construction trace under "plan".
Json reconstruction_json(const Reconstruction& r);

/// One edge per line, 1-based indices separated by spaces.
std::string to_edge_lines(const Hypergraph& g);
Json hypergraph_json(const Hypergraph& g);

/// {"feasible", "violated", "m"}
Json feasibility_json(const Feasibility& f);

/// Reads '0'/'1' lines, CSV rows, or the matrix JSON object. Blank lines and
/// lines starting with '#' are skipped in the text forms.
BinaryMatrix parse_matrix(std::string_view text, std::optional<int> cols = std::nullopt);

/// Comma- or whitespace-separated nonnegative integers.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace hyrec::io
