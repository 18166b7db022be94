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

#include "hyrec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyrec {

namespace {

void check_entries(const std::vector<int>& xs) {
  for (int x : xs) {
    if (x < 0) throw std::invalid_argument("projection entries must be >= 0");
  }
}

// Depth-first choice of m rows out of the lexicographically ordered
// candidates. need[j] is what column j still lacks.
class DistinctRowSearch {
 public:
  DistinctRowSearch(int n, std::vector<std::uint64_t> candidates, std::vector<int> need)
      : n_(n), cand_(std::move(candidates)), need_(std::move(need)) {
    // suffix_[i][j]: candidates at index >= i with a one in column j.
    suffix_.assign(cand_.size() + 1, std::vector<int>(static_cast<std::size_t>(n_), 0));
    for (std::size_t i = cand_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      for (int j = 0; j < n_; ++j) suffix_[i][static_cast<std::size_t>(j)] += has(cand_[i], j);
    }
  }

  bool run(long long rows) { return dfs(0, rows); }
  const std::vector<std::uint64_t>& chosen() const { return chosen_; }

 private:
  int has(std::uint64_t w, int j) const { return static_cast<int>((w >> (n_ - 1 - j)) & 1U); }

  bool dfs(std::size_t idx, long long rows) {
    if (rows == 0) {
      return std::all_of(need_.begin(), need_.end(), [](int x) { return x == 0; });
    }
    if (static_cast<long long>(cand_.size() - idx) < rows) return false;
    for (int j = 0; j < n_; ++j) {
      const int nj = need_[static_cast<std::size_t>(j)];
      if (nj > rows || nj > suffix_[idx][static_cast<std::size_t>(j)]) return false;
    }
    const std::uint64_t w = cand_[idx];
    bool fits = true;
    for (int j = 0; j < n_ && fits; ++j) {
      if (has(w, j) && need_[static_cast<std::size_t>(j)] == 0) fits = false;
    }
    if (fits) {
      for (int j = 0; j < n_; ++j) need_[static_cast<std::size_t>(j)] -= has(w, j);
      chosen_.push_back(w);
      if (dfs(idx + 1, rows - 1)) return true;
      chosen_.pop_back();
      for (int j = 0; j < n_; ++j) need_[static_cast<std::size_t>(j)] += has(w, j);
    }
    return dfs(idx + 1, rows);
  }

  int n_;
  std::vector<std::uint64_t> cand_;
  std::vector<int> need_;
  std::vector<std::vector<int>> suffix_;
  std::vector<std::uint64_t> chosen_;
};

bool any_matrix_dfs(std::size_t row, const std::vector<int>& H, std::vector<int>& need,
                    int n) {
  const auto rows_left = static_cast<int>(H.size() - row);
  for (int x : need) {
    if (x > rows_left) return false;
  }
  if (row == H.size()) return true;  // sums agree, so need is all zero
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if (std::popcount(w) != H[row]) continue;
    bool fits = true;
    for (int j = 0; j < n; ++j) {
      if (((w >> j) & 1U) && need[static_cast<std::size_t>(j)] == 0) fits = false;
    }
    if (!fits) continue;
    for (int j = 0; j < n; ++j) need[static_cast<std::size_t>(j)] -= static_cast<int>((w >> j) & 1U);
    const bool found = any_matrix_dfs(row + 1, H, need, n);
    for (int j = 0; j < n; ++j) need[static_cast<std::size_t>(j)] += static_cast<int>((w >> j) & 1U);
    if (found) return true;
  }
  return false;
}

}  // namespace

OracleResult exists_distinct_rows(int n, int h, const std::vector<int>& V) {
  if (n < 1 || n > kOracleMaxColumns) {
    throw std::invalid_argument("oracle handles 1 <= n <= " +
                                std::to_string(kOracleMaxColumns) + ", got " +
                                std::to_string(n));
  }
  if (static_cast<int>(V.size()) != n) throw std::invalid_argument("V must have n entries");
  if (h < 0) throw std::invalid_argument("h must be >= 0");
  check_entries(V);
  const long long total = std::accumulate(V.begin(), V.end(), 0LL);

  if (h == 0) {
    // Zero-sum rows: at most one, and it contributes nothing.
    if (total != 0) return {};
    return {true, BinaryMatrix(n)};
  }
  if (total % h != 0) {
    throw std::invalid_argument("sum of V (" + std::to_string(total) +
                                ") is not a multiple of h = " + std::to_string(h));
  }
  const long long rows = total / h;

  std::vector<int> target = V;
  const auto [lo, hi] = std::minmax_element(V.begin(), V.end());
  if (*hi - *lo <= 1) std::sort(target.begin(), target.end(), std::greater<>());

  std::vector<std::uint64_t> candidates;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if (std::popcount(w) == h) candidates.push_back(w);
  }
  DistinctRowSearch search(n, std::move(candidates), target);
  if (!search.run(rows)) return {};
  BinaryMatrix witness(n);
  for (std::uint64_t w : search.chosen()) witness.add_row(BinaryWord::from_bits(n, w));
  return {true, std::move(witness)};
}

bool exists_any_matrix(const std::vector<int>& H, const std::vector<int>& V) {
  if (H.size() > kAnyMatrixMaxSide || V.size() > kAnyMatrixMaxSide) {
    throw std::invalid_argument("exists_any_matrix handles at most 5 rows and 5 columns");
  }
  check_entries(H);
  check_entries(V);
  if (std::accumulate(H.begin(), H.end(), 0LL) != std::accumulate(V.begin(), V.end(), 0LL)) {
    return false;
  }
  std::vector<int> need(V.rbegin(), V.rend());  // bit j of a row is column n-1-j
  return any_matrix_dfs(0, H, need, static_cast<int>(V.size()));
}

}  // namespace hyrec
