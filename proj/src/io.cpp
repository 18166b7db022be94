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

#include "hyrec/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace hyrec::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Json words_json(const std::vector<BinaryWord>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

BinaryMatrix assemble(std::vector<std::string> rows, std::optional<int> cols) {
  if (rows.empty()) {
    if (!cols) throw std::invalid_argument("empty matrix needs an explicit column count");
    return BinaryMatrix(*cols);
  }
  auto a = BinaryMatrix::from_strings(rows);
  if (cols && a.col_count() != *cols) {
    throw std::invalid_argument("matrix has " + std::to_string(a.col_count()) +
                                " columns, expected " + std::to_string(*cols));
  }
  return a;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "lines") return OutputFormat::lines;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "edges") return OutputFormat::edges;
  throw std::invalid_argument("unknown format \"" + std::string(name) + "\"");
}

std::string to_csv(const BinaryMatrix& a) {
  std::string out;
  for (const auto& r : a.rows()) {
    for (int j = 0; j < r.size(); ++j) {
      if (j > 0) out += ',';
      out += r[j] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

Json matrix_json(const BinaryMatrix& a) {
  Json j;
  j["n"] = a.col_count();
  j["m"] = a.row_count();
  const auto sums = a.row_sums();
  const bool uniform =
      !sums.empty() && std::all_of(sums.begin(), sums.end(), [&](int s) { return s == sums[0]; });
  j["h"] = uniform ? Json(sums[0]) : Json(nullptr);
  j["rows"] = words_json(a.rows());
  return j;
}

Json plan_json(const Reconstruction& r) {
  Json plan;
  Json levels = Json::array();
  for (const auto& s : r.plan.levels) {
    Json l;
    l["divisor"] = s.divisor;
    l["length"] = s.length;
    l["density"] = s.density;
    l["lyndon_count"] = s.lyndon_count;
    l["remaining_before"] = s.remaining_before;
    l["q"] = s.full_necklaces;
    l["words"] = words_json(s.words);
    l["q_prime"] = s.partial_blocks;
    levels.push_back(std::move(l));
  }
  plan["levels"] = std::move(levels);
  if (r.span_one) {
    const auto& sp = *r.span_one;
    Json s;
    s["k"] = sp.k;
    s["m_prime"] = sp.m_prime;
    s["v_prime"] = sp.v_prime;
    s["t"] = sp.t;
    s["deleted_rows"] = words_json(sp.deleted_rows);
    Json order = Json::array();
    for (int c : sp.column_order) order.push_back(c + 1);
    s["column_order"] = std::move(order);
    plan["span_one"] = std::move(s);
  } else {
    plan["span_one"] = nullptr;
  }
  return plan;
}

Json reconstruction_json(const Reconstruction& r) {
  Json j = matrix_json(r.matrix);
  j["plan"] = plan_json(r);
  return j;
}

std::string to_edge_lines(const Hypergraph& g) {
  std::string out;
  for (const auto& e : g.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

Json hypergraph_json(const Hypergraph& g) {
  Json j;
  j["n"] = g.vertex_count;
  j["h"] = g.edge_size;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(e);
  j["edges"] = std::move(edges);
  return j;
}

Json feasibility_json(const Feasibility& f) {
  Json j;
  j["feasible"] = f.feasible;
  j["violated"] = f.violated ? Json(std::string(to_string(*f.violated))) : Json(nullptr);
  j["m"] = f.m ? Json(*f.m) : Json(nullptr);
  return j;
}

BinaryMatrix parse_matrix(std::string_view text, std::optional<int> cols) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    const auto j = Json::parse(body);
    std::vector<std::string> rows;
    for (const auto& r : j.at("rows")) rows.push_back(r.get<std::string>());
    if (!cols && j.contains("n")) cols = j.at("n").get<int>();
    return assemble(std::move(rows), cols);
  }
  std::vector<std::string> rows;
  std::istringstream in{std::string(body)};
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::string row;
    for (char c : t) {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
      row += c;
    }
    rows.push_back(std::move(row));
  }
  return assemble(std::move(rows), cols);
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const auto token = text.substr(i, j - i);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw std::out_of_range("integer out of range: " + std::string(token));
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("not an integer: " + std::string(token));
    }
    if (value < 0) throw std::invalid_argument("negative value: " + std::string(token));
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace hyrec::io
