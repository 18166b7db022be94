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

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyrec/consistency.hpp"
#include "hyrec/reconstruct.hpp"
#include "hyrec/words.hpp"

namespace hyrec {

/// Simple uniform hypergraph. Vertices are 1-based; each edge is sorted.
struct Hypergraph {
  int vertex_count = 0;
  int edge_size = 0;
  std::vector<std::vector<int>> edges;

  /// Every edge has edge_size distinct vertices in [1, vertex_count] and no
  /// two edges coincide.
  void validate() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// Nonincreasing vertex degrees.
struct DegreeSequence {
  std::vector<int> values;
};

/// Rows become edges; rejects repeated rows and unequal row sums.
Hypergraph from_incidence(const BinaryMatrix& a);
BinaryMatrix to_incidence(const Hypergraph& g);
DegreeSequence degree_sequence(const Hypergraph& g);

struct Infeasible {
  Feasibility feasibility;
};

struct Unsupported {
  std::string reason;
};

struct Realization {
  Hypergraph hypergraph;
  Reconstruction construction;
  /// Set when the input was not nonincreasing and had to be sorted.
  bool reordered = false;
};

using RealizeResult = std::variant<Realization, Infeasible, Unsupported>;

/// h-uniform simple hypergraph with the given degrees, for regular and
/// span-one sequences. Everything else is reported as Unsupported.
RealizeResult realize(const std::vector<int>& degrees, int h);

}  // namespace hyrec
