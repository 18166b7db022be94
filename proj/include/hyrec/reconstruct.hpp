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

// Construction of binary matrices with distinct rows, constant row sums and
// regular or span-one column sums, from full necklace classes of Lyndon words.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyrec/consistency.hpp"
#include "hyrec/words.hpp"

namespace hyrec {

/// The instance fails a feasibility condition; a user error.
class InfeasibleError : public std::invalid_argument {
 public:
  explicit InfeasibleError(Feasibility f);
  const Feasibility& feasibility() const noexcept { return feasibility_; }

 private:
  Feasibility feasibility_;
};

/// A construction step could not complete on a feasible instance.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One pass over a common divisor d of n and h.
struct LevelStep {
  int divisor = 1;
  int length = 0;   ///< n / divisor
  int density = 0;  ///< h / divisor
  std::uint64_t lyndon_count = 0;
  long long remaining_before = 0;  ///< column sum still to cover on entry
  int full_necklaces = 0;
  std::vector<BinaryWord> words;  ///< Lyndon words of this level, in use order
  int partial_blocks = 0;
  /// First row holding 0^{n-h}1^h material at this level, if placed here.
  std::optional<int> reserved_row;
  /// True when that material is coset blocks rather than the whole class.
  bool reserved_as_blocks = false;
};

struct LevelPlan {
  std::vector<LevelStep> levels;
};

struct SpanOnePlan {
  long long k = 0;
  long long m_prime = 0;
  long long v_prime = 0;
  long long t = 0;
  std::vector<BinaryWord> deleted_rows;
  /// Output column c is column column_order[c] of the regular matrix.
  std::vector<int> column_order;
};

struct Reconstruction {
  BinaryMatrix matrix;
  LevelPlan plan;
  std::optional<SpanOnePlan> span_one;
};

/// Regular case with the construction trace. Throws InfeasibleError when
/// check_regular rejects the instance.
Reconstruction rec_regular_planned(const RegularInstance& inst);
BinaryMatrix rec_regular(const RegularInstance& inst);

/// Span-one case: solves a slightly larger regular instance, removes rows of
/// the 0^{n-h}1^h coset block, then sorts columns by descending sum.
Reconstruction rec_span_one_planned(const SpanOneInstance& inst);
BinaryMatrix rec_span_one(const SpanOneInstance& inst);

struct VerifyReport {
  bool ok = true;
  std::string diagnostic;  ///< names the first failing property
  explicit operator bool() const noexcept { return ok; }
};

VerifyReport verify(const BinaryMatrix& matrix, const RegularInstance& expected);
VerifyReport verify(const BinaryMatrix& matrix, const SpanOneInstance& expected);

/// Biadjacency matrix of a k-regular bipartite graph on n + n vertices with no
/// twins: symmetric, all line sums k, rows and columns pairwise distinct.
BinaryMatrix twin_free_bipartite(int n, int k);

}  // namespace hyrec
