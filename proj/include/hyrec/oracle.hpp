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

// Brute-force ground truth for small instances. Independent of the necklace
// machinery: it only enumerates words and backtracks.

#pragma once

#include <optional>
#include <vector>

#include "hyrec/words.hpp"

namespace hyrec {

struct OracleResult {
  bool exists = false;
  std::optional<BinaryMatrix> witness;
};

inline constexpr int kOracleMaxColumns = 8;
inline constexpr int kAnyMatrixMaxSide = 5;

/// Is there a matrix with pairwise distinct rows, every row sum h, and column
/// sums V? Constant and span-one V are matched as a multiset (the witness
/// then has V sorted nonincreasing); other V are matched position by position.
///
/// Throws std::invalid_argument for n > 8, negative entries, or a sum of V
/// that is not a multiple of h.
OracleResult exists_distinct_rows(int n, int h, const std::vector<int>& V);

/// Is there any binary matrix (rows may repeat) with row sums H and column
/// sums V? Requires |H|, |V| <= 5.
bool exists_any_matrix(const std::vector<int>& H, const std::vector<int>& V);

}  // namespace hyrec
