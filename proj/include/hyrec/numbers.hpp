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

// Divisor arithmetic, exact binomials, and fixed-density necklace / Lyndon
// word counting and generation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyrec/words.hpp"

namespace hyrec {

/// Words of length n with d ones.
struct DensityClass {
  int n;
  int d;

  /// Throws std::invalid_argument unless 1 <= n <= 64 and 0 <= d <= n.
  void validate() const;
};

/// All common divisors of n and h in increasing order; starts at 1, ends at gcd.
std::vector<int> common_divisors(int n, int h);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

long long euler_phi(long long j);
int mobius(long long j);

/// Exact C(n, k); 0 when k > n. Throws std::overflow_error past 2^64 - 1.
std::uint64_t binomial(long long n, long long k);

/// |N(n, d)|, by the divisor sum weighted with Euler's phi.
std::uint64_t count_necklaces(DensityClass c);

/// |L(n, d)|, by the divisor sum weighted with the Moebius function.
std::uint64_t count_lyndon(DensityClass c);

enum class WordKind { lyndon, necklace };

/// Lazy generator of fixed-density necklace representatives or Lyndon words,
/// in increasing lexicographic order.
///
/// Prefix-extension over prenecklaces: position t either copies the symbol
/// one period back or, when that symbol is 0, takes a 1 and becomes a new
/// period. Branches that cannot end with exactly d ones are cut.
class FixedDensityStream {
 public:
  FixedDensityStream(DensityClass c, WordKind kind);

  /// Next word, or nullopt once the class is exhausted.
  std::optional<BinaryWord> next();

 private:
  struct Frame {
    int t;
    int p;
    int ones;
    int stage;
  };

  bool viable(int ones, int t) const noexcept {
    return ones <= cls_.d && ones + (cls_.n - t) >= cls_.d;
  }

  DensityClass cls_;
  WordKind kind_;
  std::vector<std::uint8_t> a_;
  std::vector<Frame> stack_;
};

/// Up to `limit` words of L(n, d) (all of them when limit is nullopt).
std::vector<BinaryWord> gen_lyndon(DensityClass c,
                                   std::optional<std::size_t> limit = std::nullopt);

/// Up to `limit` words of N(n, d).
std::vector<BinaryWord> gen_necklaces(DensityClass c,
                                      std::optional<std::size_t> limit = std::nullopt);

}  // namespace hyrec
