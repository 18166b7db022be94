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

#include "hyrec/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace hyrec {

void Hypergraph::validate() const {
  if (vertex_count < 1) throw std::invalid_argument("hypergraph needs at least one vertex");
  std::set<std::vector<int>> seen;
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != edge_size) {
      throw std::invalid_argument("edge of size " + std::to_string(e.size()) +
                                  " in a " + std::to_string(edge_size) +
                                  "-uniform hypergraph");
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 1 || e[i] > vertex_count) {
        throw std::invalid_argument("vertex " + std::to_string(e[i]) + " out of range");
      }
      if (i > 0 && e[i - 1] >= e[i]) {
        throw std::invalid_argument("edge vertices must be strictly increasing");
      }
    }
    if (!seen.insert(e).second) throw std::invalid_argument("parallel edges");
  }
}

Hypergraph from_incidence(const BinaryMatrix& a) {
  if (!a.has_distinct_rows()) {
    throw std::invalid_argument("duplicate rows would give parallel edges");
  }
  Hypergraph g;
  g.vertex_count = a.col_count();
  g.edge_size = a.row_count() == 0 ? 0 : a.row(0).density();
  for (const auto& r : a.rows()) {
    if (r.density() != g.edge_size) {
      throw std::invalid_argument("rows have different sums; hypergraph not uniform");
    }
    std::vector<int> e;
    for (int j = 0; j < r.size(); ++j) {
      if (r[j]) e.push_back(j + 1);
    }
    g.edges.push_back(std::move(e));
  }
  return g;
}

BinaryMatrix to_incidence(const Hypergraph& g) {
  g.validate();
  BinaryMatrix a(g.vertex_count);
  for (const auto& e : g.edges) {
    std::uint64_t bits = 0;
    for (int x : e) bits |= std::uint64_t{1} << (g.vertex_count - x);
    a.add_row(BinaryWord::from_bits(g.vertex_count, bits));
  }
  return a;
}

DegreeSequence degree_sequence(const Hypergraph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count), 0);
  for (const auto& e : g.edges) {
    for (int x : e) ++deg.at(static_cast<std::size_t>(x - 1));
  }
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return {std::move(deg)};
}

RealizeResult realize(const std::vector<int>& degrees, int h) {
  if (h < 1) throw std::invalid_argument("edge size h must be >= 1");
  const auto checked = check_degrees(degrees, h);
  const auto& cls = checked.degrees;
  if (cls.cls == DegreeClass::unsupported) return Unsupported{cls.reason};
  if (!checked.feasibility.feasible) return Infeasible{checked.feasibility};

  Realization out{{}, {BinaryMatrix(static_cast<int>(cls.sorted.size())), {}, std::nullopt},
                  cls.was_reordered};
  if (cls.cls == DegreeClass::regular) {
    out.construction = rec_regular_planned(regular_instance(cls.sorted, h, *checked.feasibility.m));
  } else {
    out.construction = rec_span_one_planned(span_one_instance(cls.sorted, h));
  }
  out.hypergraph = from_incidence(out.construction.matrix);
  out.hypergraph.edge_size = h;
  return out;
}

}  // namespace hyrec
