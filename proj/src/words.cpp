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

#include "hyrec/words.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hyrec {

namespace {

std::uint64_t mask_for(int length) {
  return length == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
}

void check_length(int length) {
  if (length < 1 || length > BinaryWord::kMaxLength) {
    throw std::invalid_argument("word length must be in [1, 64], got " +
                                std::to_string(length));
  }
}

}  // namespace

BinaryWord::BinaryWord(std::string_view text)
    : length_(static_cast<int>(text.size())), bits_(0) {
  check_length(length_);
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("word symbols must be '0' or '1': \"" +
                                  std::string(text) + "\"");
    }
    bits_ = (bits_ << 1) | static_cast<std::uint64_t>(c == '1');
  }
}

BinaryWord BinaryWord::from_bits(int length, std::uint64_t bits) {
  check_length(length);
  return {length, bits & mask_for(length)};
}

BinaryWord BinaryWord::zeros(int length) { return from_bits(length, 0); }

BinaryWord BinaryWord::zeros_then_ones(int zeros, int ones) {
  if (zeros < 0 || ones < 0) {
    throw std::invalid_argument("negative symbol count");
  }
  const int n = zeros + ones;
  check_length(n);
  return from_bits(n, ones == 0 ? 0 : mask_for(ones));
}

int BinaryWord::density() const noexcept { return std::popcount(bits_); }

std::string BinaryWord::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
  if (a.length_ == b.length_) return a.bits_ <=> b.bits_;
  const int common = std::min(a.length_, b.length_);
  const std::uint64_t pa = a.bits_ >> (a.length_ - common);
  const std::uint64_t pb = b.bits_ >> (b.length_ - common);
  if (pa != pb) return pa <=> pb;
  return a.length_ <=> b.length_;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) {
  return os << w.to_string();
}

BinaryWord cyclic_shift(const BinaryWord& w, long long k) {
  const int n = w.size();
  const int r = static_cast<int>(((k % n) + n) % n);
  if (r == 0) return w;
  const std::uint64_t x = w.bits();
  return BinaryWord::from_bits(n, (x << r) | (x >> (n - r)));
}

int period(const BinaryWord& w) {
  const int n = w.size();
  for (int p = 1; p < n; ++p) {
    if (n % p == 0 && cyclic_shift(w, p) == w) return p;
  }
  return n;
}

BinaryWord canonical(const BinaryWord& w) {
  BinaryWord best = w;
  for (int k = 1; k < w.size(); ++k) {
    best = std::min(best, cyclic_shift(w, k));
  }
  return best;
}

bool is_lyndon(const BinaryWord& w) {
  return period(w) == w.size() && canonical(w) == w;
}

BinaryWord repeat(const BinaryWord& w, int times) {
  if (times < 1) throw std::invalid_argument("repeat count must be positive");
  check_length(w.size() * times);
  std::uint64_t bits = 0;
  for (int i = 0; i < times; ++i) bits = (bits << w.size()) | w.bits();
  return BinaryWord::from_bits(w.size() * times, bits);
}

BinaryMatrix::BinaryMatrix(int cols) : cols_(cols) { check_length(cols); }

BinaryMatrix::BinaryMatrix(int cols, std::vector<BinaryWord> rows)
    : cols_(cols), rows_(std::move(rows)) {
  check_length(cols);
  for (const auto& r : rows_) {
    if (r.size() != cols_) {
      throw std::invalid_argument("matrix rows must all have length " +
                                  std::to_string(cols_));
    }
  }
}

BinaryMatrix BinaryMatrix::from_strings(std::span<const std::string> rows) {
  if (rows.empty()) {
    throw std::invalid_argument("cannot infer matrix width from zero rows");
  }
  std::vector<BinaryWord> words;
  words.reserve(rows.size());
  for (const auto& r : rows) words.emplace_back(r);
  const int cols = words.front().size();
  return {cols, std::move(words)};
}

void BinaryMatrix::add_row(const BinaryWord& w) {
  if (w.size() != cols_) {
    throw std::invalid_argument("row length " + std::to_string(w.size()) +
                                " does not match matrix width " +
                                std::to_string(cols_));
  }
  rows_.push_back(w);
}

void BinaryMatrix::append(const BinaryMatrix& other) {
  for (const auto& r : other.rows_) add_row(r);
}

std::vector<int> BinaryMatrix::row_sums() const {
  std::vector<int> sums;
  sums.reserve(rows_.size());
  for (const auto& r : rows_) sums.push_back(r.density());
  return sums;
}

std::vector<int> BinaryMatrix::column_sums() const {
  std::vector<int> sums(static_cast<std::size_t>(cols_), 0);
  for (const auto& r : rows_) {
    for (int j = 0; j < cols_; ++j) sums[static_cast<std::size_t>(j)] += r[j];
  }
  return sums;
}

bool BinaryMatrix::has_distinct_rows() const {
  std::unordered_set<std::uint64_t> seen;
  for (const auto& r : rows_) {
    if (!seen.insert(r.bits()).second) return false;
  }
  return true;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(row_count());
  for (int j = 0; j < cols_; ++j) {
    std::uint64_t bits = 0;
    for (const auto& r : rows_) bits = (bits << 1) | static_cast<std::uint64_t>(r[j]);
    t.add_row(BinaryWord::from_bits(row_count(), bits));
  }
  return t;
}

BinaryMatrix BinaryMatrix::permute_columns(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != cols_) {
    throw std::invalid_argument("column permutation has wrong length");
  }
  BinaryMatrix out(cols_);
  for (const auto& r : rows_) {
    std::uint64_t bits = 0;
    for (int src : order) bits = (bits << 1) | static_cast<std::uint64_t>(r[src]);
    out.add_row(BinaryWord::from_bits(cols_, bits));
  }
  return out;
}

BinaryMatrix BinaryMatrix::without_rows(std::vector<int> indices) const {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw std::invalid_argument("duplicate row index in deletion list");
  }
  BinaryMatrix out(cols_);
  std::size_t next = 0;
  for (int i = 0; i < row_count(); ++i) {
    if (next < indices.size() && indices[next] == i) {
      ++next;
      continue;
    }
    out.add_row(rows_[static_cast<std::size_t>(i)]);
  }
  if (next != indices.size()) throw std::out_of_range("row index out of range");
  return out;
}

std::string BinaryMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BinaryMatrix& m) {
  for (const auto& r : m.rows()) os << r << '\n';
  return os;
}

BinaryMatrix shift_matrix(const BinaryWord& u) {
  BinaryMatrix m(u.size());
  const int p = period(u);
  for (int i = 0; i < p; ++i) m.add_row(cyclic_shift(u, i));
  return m;
}

BinaryMatrix block_submatrix(int n, int h, int j) {
  if (h < 1 || h > n - 1) {
    throw std::invalid_argument("block_submatrix needs 1 <= h <= n-1");
  }
  const int g = std::gcd(n, h);
  if (j < 0 || j >= g) {
    throw std::invalid_argument("block index " + std::to_string(j) +
                                " outside [0, gcd(n,h)) = [0, " +
                                std::to_string(g) + ")");
  }
  // 1^j 0^{n-h} 1^{h-j} is the base word rotated right by j.
  const BinaryWord base = cyclic_shift(BinaryWord::zeros_then_ones(n - h, h), -j);
  BinaryMatrix m(n);
  const int k = n / g;
  for (int i = 0; i < k; ++i) {
    m.add_row(cyclic_shift(base, static_cast<long long>(i) * h));
  }
  return m;
}

}  // namespace hyrec
