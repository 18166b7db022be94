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

// Feasibility of homogeneous-row-sum projections with distinct rows, for
// regular and span-one column sums, plus the classical Gale-Ryser and
// Erdos-Gallai tests.
//
// Conditions, for n columns, m rows, row sum h and column sums v (or v and
// v-1, with n1 columns at v-1):
//   cond1  m*h == n*v            (span one: m*h == n*v - n1)
//   cond2  h <= n and v <= m
//   cond3  v*n <= h*C(n,h)       (distinct rows fit among the C(n,h) words)

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyrec {

enum class Condition { cond1, cond2, cond3, integrality };

std::string_view to_string(Condition c);

struct Feasibility {
  bool feasible = true;
  std::optional<Condition> violated;
  /// Row count; unset when it is not an integer.
  std::optional<long long> m;

  static Feasibility ok(long long m) { return {true, std::nullopt, m}; }
  static Feasibility fail(Condition c, std::optional<long long> m) {
    return {false, c, m};
  }
};

struct RegularInstance {
  int n = 0;
  long long m = 0;
  int h = 0;
  long long v = 0;

  /// n >= 1 and m, h, v >= 0.
  void validate() const;
};

/// Column sums v on n0 columns and v-1 on n1 columns, all rows of sum h.
struct SpanOneInstance {
  int n = 0;
  int h = 0;
  long long v = 0;
  int n0 = 0;
  int n1 = 0;

  /// n0 + n1 == n, n0 >= 1, n1 >= 1, v >= 1.
  void validate() const;

  /// (n*v - n1) / h when that is a nonnegative integer.
  std::optional<long long> rows() const;

  /// (v,...,v, v-1,...,v-1)
  std::vector<int> degrees() const;
};

struct GeneralInstance {
  std::vector<int> H;
  std::vector<int> V;
};

/// v_bar[i-1] = |{ j : V[j] >= i }| for i = 1 .. max(V).
struct FerrersSequence {
  std::vector<int> values;
};

/// Checks bounds (cond2), then the sum (cond1), then capacity (cond3).
Feasibility check_regular(const RegularInstance& inst);

/// Throws std::invalid_argument when the instance itself is malformed;
/// a non-integral row count is reported as `integrality`.
Feasibility check_span_one(const SpanOneInstance& inst);

FerrersSequence conjugate(const std::vector<int>& V);

/// Existence of a binary matrix (rows may repeat) with row sums H and
/// column sums V, by dominance of the conjugate of V over sorted H.
bool gale_ryser_check(const GeneralInstance& inst);

bool erdos_gallai_check(std::vector<int> d);

/// Shape of a degree sequence as far as realization is concerned.
enum class DegreeClass { regular, span_one, unsupported };

struct ClassifiedDegrees {
  DegreeClass cls;
  /// Sorted nonincreasing copy of the input.
  std::vector<int> sorted;
  /// True when the input was not already nonincreasing.
  bool was_reordered = false;
  /// Human-readable reason when unsupported ("span>1", "empty", ...).
  std::string reason;
};

ClassifiedDegrees classify_degrees(std::vector<int> degrees);

/// Regular instance implied by n equal degrees v and row sum h; the row count
/// is n*v/h when integral.
struct DegreeCheck {
  Feasibility feasibility;
  ClassifiedDegrees degrees;
};

/// Feasibility of an arbitrary degree sequence for h-uniform rows. Unsupported
/// shapes come back with degrees.cls == unsupported and feasible == false.
DegreeCheck check_degrees(const std::vector<int>& degrees, int h);

/// Instance views of a classified sequence. Preconditions: the matching class.
RegularInstance regular_instance(const std::vector<int>& sorted, int h, long long m);
SpanOneInstance span_one_instance(const std::vector<int>& sorted, int h);

}  // namespace hyrec
