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

// Binary words under cyclic shift and the row-stacked matrices built from them.

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyrec {

/// A binary word of length 1..64, stored packed in a single 64-bit integer.
///
/// Symbol 0 (the leftmost when rendered) lives in the most significant of the
/// `size()` used bits, so for two words of equal length the integer order of
/// `bits()` is the lexicographic order with 0 < 1.
class BinaryWord {
 public:
  static constexpr int kMaxLength = 64;

  /// Parses a string of '0'/'1' characters.
  explicit BinaryWord(std::string_view text);

  /// Builds a word of `length` symbols from the low `length` bits of `bits`.
  static BinaryWord from_bits(int length, std::uint64_t bits);

  static BinaryWord zeros(int length);

  /// 0^zeros 1^ones
  static BinaryWord zeros_then_ones(int zeros, int ones);

  int size() const noexcept { return length_; }
  int density() const noexcept;
  std::uint64_t bits() const noexcept { return bits_; }

  /// Symbol at 0-based position `i`.
  bool operator[](int i) const noexcept {
    return ((bits_ >> (length_ - 1 - i)) & 1U) != 0;
  }

  std::string to_string() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a,
                                          const BinaryWord& b);

 private:
  BinaryWord(int length, std::uint64_t bits) : length_(length), bits_(bits) {}

  int length_;
  std::uint64_t bits_;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

/// Left rotation by `k` positions: s(u) = u_2 ... u_n u_1 applied k times.
BinaryWord cyclic_shift(const BinaryWord& w, long long k);

/// Smallest p >= 1 with cyclic_shift(w, p) == w. Always divides w.size().
int period(const BinaryWord& w);

/// Lexicographically least rotation of `w`.
BinaryWord canonical(const BinaryWord& w);

bool is_lyndon(const BinaryWord& w);

/// w concatenated with itself `times` times.
BinaryWord repeat(const BinaryWord& w, int times);

/// Ordered list of equal-length rows.
class BinaryMatrix {
 public:
  explicit BinaryMatrix(int cols);
  BinaryMatrix(int cols, std::vector<BinaryWord> rows);

  /// Parses one '0'/'1' row per element. Needs at least one row to fix the width.
  static BinaryMatrix from_strings(std::span<const std::string> rows);

  int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  int col_count() const noexcept { return cols_; }
  const std::vector<BinaryWord>& rows() const noexcept { return rows_; }
  const BinaryWord& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  bool at(int i, int j) const { return row(i)[j]; }

  void add_row(const BinaryWord& w);
  void append(const BinaryMatrix& other);

  std::vector<int> row_sums() const;
  std::vector<int> column_sums() const;
  bool has_distinct_rows() const;

  BinaryMatrix transpose() const;

  /// New matrix whose column c is column order[c] of this one.
  BinaryMatrix permute_columns(std::span<const int> order) const;

  /// Removes the rows with the given indices (any order, no repeats).
  BinaryMatrix without_rows(std::vector<int> indices) const;

  /// One row string per line, each terminated by '\n'.
  std::string to_string() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  int cols_;
  std::vector<BinaryWord> rows_;
};

std::ostream& operator<<(std::ostream& os, const BinaryMatrix& m);

/// Rows are the distinct cyclic shifts of `u`, shift 0 first.
BinaryMatrix shift_matrix(const BinaryWord& u);

/// Coset block j of the class of 0^{n-h} 1^h: rows s^{i*h}(1^j 0^{n-h} 1^{h-j})
/// for i = 0 .. n/gcd(n,h) - 1. Requires 1 <= h <= n-1 and 0 <= j < gcd(n,h).
BinaryMatrix block_submatrix(int n, int h, int j);

}  // namespace hyrec
