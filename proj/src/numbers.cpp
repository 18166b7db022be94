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

#include "hyrec/numbers.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyrec {

namespace {

using i128 = __int128;

constexpr i128 kU64Max = static_cast<i128>(std::numeric_limits<std::uint64_t>::max());

std::uint64_t narrow_checked(i128 value, const char* what) {
  if (value < 0 || value > kU64Max) {
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

// Shared body of the two Gilbert-Riordan sums; `weight` is phi or mu.
template <typename Weight>
std::uint64_t divisor_sum(DensityClass c, Weight weight, const char* what) {
  c.validate();
  i128 total = 0;
  const int g = std::gcd(c.n, c.d);
  for (int j : divisors(g)) {
    const i128 term = static_cast<i128>(weight(j)) *
                      static_cast<i128>(binomial(c.n / j, c.d / j));
    total += term;
    if (total > kU64Max * 64 || total < -kU64Max * 64) {
      throw std::overflow_error(std::string(what) + " overflow");
    }
  }
  if (total % c.n != 0) {
    throw std::logic_error(std::string(what) + ": divisor sum not divisible by n");
  }
  return narrow_checked(total / c.n, what);
}

}  // namespace

void DensityClass::validate() const {
  if (n < 1 || n > BinaryWord::kMaxLength) {
    throw std::invalid_argument("length n must be in [1, 64], got " + std::to_string(n));
  }
  if (d < 0 || d > n) {
    throw std::invalid_argument("density must be in [0, n], got " + std::to_string(d));
  }
}

std::vector<int> divisors(int n) {
  if (n < 1) throw std::invalid_argument("divisors() needs n >= 1");
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::vector<int> common_divisors(int n, int h) {
  if (n < 1 || h < 1) throw std::invalid_argument("common_divisors() needs n, h >= 1");
  return divisors(std::gcd(n, h));
}

long long euler_phi(long long j) {
  if (j < 1) throw std::invalid_argument("euler_phi() needs j >= 1");
  long long result = j;
  for (long long p = 2; p * p <= j; ++p) {
    if (j % p == 0) {
      while (j % p == 0) j /= p;
      result -= result / p;
    }
  }
  if (j > 1) result -= result / j;
  return result;
}

int mobius(long long j) {
  if (j < 1) throw std::invalid_argument("mobius() needs j >= 1");
  int sign = 1;
  for (long long p = 2; p * p <= j; ++p) {
    if (j % p == 0) {
      j /= p;
      if (j % p == 0) return 0;
      sign = -sign;
    }
  }
  if (j > 1) sign = -sign;
  return sign;
}

std::uint64_t binomial(long long n, long long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial() needs n, k >= 0");
  if (k > n) return 0;
  k = std::min(k, n - k);
  // After step i the accumulator holds C(n - k + i, i), so each division is exact.
  i128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kU64Max) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                std::to_string(k) + ") does not fit in 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t count_necklaces(DensityClass c) {
  return divisor_sum(c, [](int j) { return euler_phi(j); }, "count_necklaces");
}

std::uint64_t count_lyndon(DensityClass c) {
  return divisor_sum(c, [](int j) { return static_cast<long long>(mobius(j)); },
                     "count_lyndon");
}

FixedDensityStream::FixedDensityStream(DensityClass c, WordKind kind)
    : cls_(c), kind_(kind), a_(static_cast<std::size_t>(c.n) + 1, 0) {
  c.validate();
  stack_.push_back({1, 1, 0, 0});
}

std::optional<BinaryWord> FixedDensityStream::next() {
  const int n = cls_.n;
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    if (f.t > n) {
      const Frame leaf = f;
      stack_.pop_back();
      const bool accept = kind_ == WordKind::lyndon ? leaf.p == n : n % leaf.p == 0;
      if (accept && leaf.ones == cls_.d) {
        std::uint64_t bits = 0;
        for (int i = 1; i <= n; ++i) bits = (bits << 1) | a_[static_cast<std::size_t>(i)];
        return BinaryWord::from_bits(n, bits);
      }
      continue;
    }
    const auto t = static_cast<std::size_t>(f.t);
    const std::uint8_t back = a_[t - static_cast<std::size_t>(f.p)];
    if (f.stage == 0) {
      f.stage = 1;
      a_[t] = back;
      if (viable(f.ones + back, f.t)) {
        stack_.push_back({f.t + 1, f.p, f.ones + back, 0});
      }
    } else if (f.stage == 1) {
      f.stage = 2;
      if (back == 0) {
        a_[t] = 1;
        if (viable(f.ones + 1, f.t)) {
          stack_.push_back({f.t + 1, f.t, f.ones + 1, 0});
        }
      }
    } else {
      stack_.pop_back();
    }
  }
  return std::nullopt;
}

namespace {

std::vector<BinaryWord> collect(DensityClass c, WordKind kind,
                                std::optional<std::size_t> limit) {
  FixedDensityStream stream(c, kind);
  std::vector<BinaryWord> out;
  while (!limit || out.size() < *limit) {
    auto w = stream.next();
    if (!w) break;
    out.push_back(*w);
  }
  return out;
}

}  // namespace

std::vector<BinaryWord> gen_lyndon(DensityClass c, std::optional<std::size_t> limit) {
  return collect(c, WordKind::lyndon, limit);
}

std::vector<BinaryWord> gen_necklaces(DensityClass c, std::optional<std::size_t> limit) {
  return collect(c, WordKind::necklace, limit);
}

}  // namespace hyrec
