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

#include "hyrec/consistency.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hyrec/numbers.hpp"

namespace hyrec {

namespace {

using i128 = __int128;

// v*n <= h*C(n,h) in exact arithmetic.
bool capacity_holds(int n, int h, long long v) {
  const i128 demand = static_cast<i128>(v) * n;
  try {
    return demand <= static_cast<i128>(binomial(n, h)) * h;
  } catch (const std::overflow_error&) {
    // C(n,h) >= 2^64 is only a lower bound here.
    if (demand <= (static_cast<i128>(1) << 64) * h) return true;
    throw;
  }
}

}  // namespace

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::cond1: return "cond1";
    case Condition::cond2: return "cond2";
    case Condition::cond3: return "cond3";
    case Condition::integrality: return "integrality";
  }
  return "unknown";
}

void RegularInstance::validate() const {
  if (n < 1) throw std::invalid_argument("regular instance needs n >= 1");
  if (m < 0 || h < 0 || v < 0) {
    throw std::invalid_argument("regular instance needs m, h, v >= 0");
  }
}

void SpanOneInstance::validate() const {
  if (n0 < 1 || n1 < 1) {
    throw std::invalid_argument("span-one instance needs n0 >= 1 and n1 >= 1");
  }
  if (n0 + n1 != n) throw std::invalid_argument("span-one instance needs n0 + n1 == n");
  if (v < 1) throw std::invalid_argument("span-one instance needs v >= 1");
  if (h < 0) throw std::invalid_argument("span-one instance needs h >= 0");
}

std::optional<long long> SpanOneInstance::rows() const {
  if (h <= 0) return std::nullopt;
  const long long total = static_cast<long long>(n) * v - n1;
  if (total < 0 || total % h != 0) return std::nullopt;
  return total / h;
}

std::vector<int> SpanOneInstance::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n0), static_cast<int>(v));
  out.insert(out.end(), static_cast<std::size_t>(n1), static_cast<int>(v - 1));
  return out;
}

Feasibility check_regular(const RegularInstance& inst) {
  inst.validate();
  const auto [n, m, h, v] = inst;
  if (h > n || v > m) return Feasibility::fail(Condition::cond2, m);
  if (static_cast<i128>(m) * h != static_cast<i128>(n) * v) {
    return Feasibility::fail(Condition::cond1, m);
  }
  if (h == 0) {
    // Only the zero word exists; two copies of it would repeat.
    return m <= 1 ? Feasibility::ok(m) : Feasibility::fail(Condition::cond3, m);
  }
  if (!capacity_holds(n, h, v)) return Feasibility::fail(Condition::cond3, m);
  return Feasibility::ok(m);
}

Feasibility check_span_one(const SpanOneInstance& inst) {
  inst.validate();
  if (inst.h > inst.n) return Feasibility::fail(Condition::cond2, inst.rows());
  const auto m = inst.rows();
  if (!m) return Feasibility::fail(Condition::integrality, std::nullopt);
  if (inst.v > *m) return Feasibility::fail(Condition::cond2, m);
  if (!capacity_holds(inst.n, inst.h, inst.v)) return Feasibility::fail(Condition::cond3, m);
  return Feasibility::ok(*m);
}

FerrersSequence conjugate(const std::vector<int>& V) {
  int top = 0;
  for (int x : V) {
    if (x < 0) throw std::invalid_argument("projection entries must be >= 0");
    top = std::max(top, x);
  }
  FerrersSequence out;
  out.values.assign(static_cast<std::size_t>(top), 0);
  for (int x : V) {
    for (int i = 0; i < x; ++i) ++out.values[static_cast<std::size_t>(i)];
  }
  return out;
}

bool gale_ryser_check(const GeneralInstance& inst) {
  std::vector<int> H = inst.H;
  for (int x : H) {
    if (x < 0) throw std::invalid_argument("projection entries must be >= 0");
  }
  std::sort(H.begin(), H.end(), std::greater<>());
  const auto vbar = conjugate(inst.V).values;
  const long long sum_h = std::accumulate(H.begin(), H.end(), 0LL);
  const long long sum_v = std::accumulate(inst.V.begin(), inst.V.end(), 0LL);
  if (sum_h != sum_v) return false;
  long long partial_h = 0;
  long long partial_vbar = 0;
  for (std::size_t i = 0; i < H.size(); ++i) {
    partial_h += H[i];
    if (i < vbar.size()) partial_vbar += vbar[i];
    if (partial_vbar < partial_h) return false;
  }
  return true;
}

bool erdos_gallai_check(std::vector<int> d) {
  for (int x : d) {
    if (x < 0) throw std::invalid_argument("degrees must be >= 0");
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  const long long total = std::accumulate(d.begin(), d.end(), 0LL);
  if (total % 2 != 0) return false;
  const auto n = static_cast<long long>(d.size());
  long long prefix = 0;
  for (long long k = 1; k <= n; ++k) {
    prefix += d[static_cast<std::size_t>(k - 1)];
    long long tail = 0;
    for (long long i = k; i < n; ++i) tail += std::min<long long>(k, d[static_cast<std::size_t>(i)]);
    if (prefix > k * (k - 1) + tail) return false;
  }
  return true;
}

ClassifiedDegrees classify_degrees(std::vector<int> degrees) {
  for (int x : degrees) {
    if (x < 0) throw std::invalid_argument("degrees must be >= 0");
  }
  ClassifiedDegrees out;
  out.was_reordered = !std::is_sorted(degrees.begin(), degrees.end(), std::greater<>());
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  out.sorted = std::move(degrees);
  if (out.sorted.empty()) {
    out.cls = DegreeClass::unsupported;
    out.reason = "empty";
    return out;
  }
  const int span = out.sorted.front() - out.sorted.back();
  if (span == 0) {
    out.cls = DegreeClass::regular;
  } else if (span == 1) {
    out.cls = DegreeClass::span_one;
  } else {
    out.cls = DegreeClass::unsupported;
    out.reason = "span>1";
  }
  return out;
}

RegularInstance regular_instance(const std::vector<int>& sorted, int h, long long m) {
  return {static_cast<int>(sorted.size()), m, h, sorted.front()};
}

SpanOneInstance span_one_instance(const std::vector<int>& sorted, int h) {
  const int v = sorted.front();
  const auto n0 = static_cast<int>(std::count(sorted.begin(), sorted.end(), v));
  const int n = static_cast<int>(sorted.size());
  return {n, h, v, n0, n - n0};
}

DegreeCheck check_degrees(const std::vector<int>& degrees, int h) {
  if (h < 0) throw std::invalid_argument("edge size h must be >= 0");
  DegreeCheck out{Feasibility{}, classify_degrees(degrees)};
  const auto& d = out.degrees.sorted;
  switch (out.degrees.cls) {
    case DegreeClass::unsupported:
      out.feasibility = {false, std::nullopt, std::nullopt};
      break;
    case DegreeClass::regular: {
      const auto n = static_cast<long long>(d.size());
      const long long v = d.front();
      if (h == 0) {
        out.feasibility = v == 0 ? Feasibility::ok(0)
                                 : Feasibility::fail(Condition::cond1, std::nullopt);
      } else if ((n * v) % h != 0) {
        out.feasibility = Feasibility::fail(h > n ? Condition::cond2 : Condition::cond1,
                                            std::nullopt);
      } else {
        out.feasibility = check_regular(regular_instance(d, h, n * v / h));
      }
      break;
    }
    case DegreeClass::span_one:
      out.feasibility = check_span_one(span_one_instance(d, h));
      break;
  }
  return out;
}

}  // namespace hyrec
