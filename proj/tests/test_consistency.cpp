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

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <random>

#include "hyrec/consistency.hpp"
#include "hyrec/numbers.hpp"
#include "hyrec/oracle.hpp"

using namespace hyrec;

TEST_CASE("check_regular examples") {
  const auto a = check_regular({6, 15, 2, 5});
  CHECK(a.feasible);
  CHECK(a.m == 15);

  const auto b = check_regular({6, 18, 2, 6});
  CHECK_FALSE(b.feasible);
  CHECK(b.violated == Condition::cond3);

  CHECK(check_regular({4, 1, 4, 1}).feasible);
}

TEST_CASE("check_regular reporting order: bounds, sum, capacity") {
  // h > n and a bad sum: bounds first
  CHECK(check_regular({3, 2, 4, 7}).violated == Condition::cond2);
  // v > m
  CHECK(check_regular({6, 2, 2, 3}).violated == Condition::cond2);
  // sum mismatch only
  CHECK(check_regular({6, 10, 2, 3}).violated == Condition::cond1);
  // capacity only
  CHECK(check_regular({4, 8, 2, 4}).violated == Condition::cond3);
}

TEST_CASE("check_regular with h = 0") {
  CHECK(check_regular({5, 0, 0, 0}).feasible);
  CHECK(check_regular({5, 1, 0, 0}).feasible);
  CHECK(check_regular({5, 2, 0, 0}).violated == Condition::cond3);
  CHECK(check_regular({5, 3, 0, 1}).violated == Condition::cond1);
}

TEST_CASE("check_regular rejects malformed instances") {
  CHECK_THROWS_AS(check_regular({0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_regular({3, -1, 1, 1}), std::invalid_argument);
}

TEST_CASE("capacity is monotone in v") {
  for (int n = 1; n <= 10; ++n) {
    for (int h = 1; h <= n; ++h) {
      bool seen_infeasible = false;
      for (long long v = 0; v <= 300; ++v) {
        if ((n * v) % h != 0) continue;
        const bool ok = check_regular({n, n * v / h, h, v}).feasible;
        if (seen_infeasible) CHECK_FALSE(ok);
        if (!ok) seen_infeasible = true;
      }
    }
  }
}

TEST_CASE("check_span_one examples") {
  const auto a = check_span_one({9, 3, 5, 3, 6});
  CHECK(a.feasible);
  CHECK(a.m == 13);

  const auto b = check_span_one({4, 2, 3, 3, 1});
  CHECK_FALSE(b.feasible);
  CHECK(b.violated == Condition::integrality);
  CHECK_FALSE(b.m.has_value());

  const auto c = check_span_one({6, 3, 2, 3, 3});
  CHECK(c.feasible);
  CHECK(c.m == 3);

  CHECK(check_span_one({4, 0, 1, 2, 2}).violated == Condition::integrality);
  CHECK(check_span_one({3, 4, 2, 1, 2}).violated == Condition::cond2);
}

TEST_CASE("span-one instance validation") {
  CHECK_THROWS_AS(check_span_one({4, 2, 2, 4, 0}), std::invalid_argument);
  CHECK_THROWS_AS(check_span_one({4, 2, 2, 0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(check_span_one({4, 2, 2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_span_one({4, 2, 0, 2, 2}), std::invalid_argument);
  const SpanOneInstance s{9, 3, 5, 3, 6};
  CHECK(s.degrees() == std::vector<int>{5, 5, 5, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("conjugate") {
  CHECK(conjugate({5, 5, 5, 4, 4, 4, 4, 4, 4}).values == std::vector<int>{9, 9, 9, 9, 3});
  CHECK(conjugate({2, 1}).values == std::vector<int>{2, 1});
  CHECK(conjugate({0, 0}).values.empty());
  CHECK_THROWS_AS(conjugate({1, -1}), std::invalid_argument);
}

TEST_CASE("conjugate is an involution on partitions") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> v(1 + rng() % 8);
    for (auto& x : v) x = 1 + static_cast<int>(rng() % 9);
    const auto cc = conjugate(conjugate(v).values).values;
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    CHECK(cc == sorted);
    const auto sum_v = std::accumulate(v.begin(), v.end(), 0);
    const auto cv = conjugate(v).values;
    CHECK(std::accumulate(cv.begin(), cv.end(), 0) == sum_v);
  }
}

TEST_CASE("gale_ryser_check examples") {
  CHECK(gale_ryser_check({{2, 2}, {1, 1, 1, 1}}));
  CHECK_FALSE(gale_ryser_check({{2, 2, 0}, {3, 1}}));
  CHECK(gale_ryser_check({{2, 1}, {2, 1}}));
  // unsorted H is sorted internally
  CHECK(gale_ryser_check({{1, 2}, {2, 1}}));
  CHECK_FALSE(gale_ryser_check({{3}, {1, 1}}));
}

TEST_CASE("gale_ryser_check agrees with exhaustive search on random small inputs") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<int> H(1 + rng() % 5);
    std::vector<int> V(1 + rng() % 5);
    for (auto& x : H) x = static_cast<int>(rng() % 6);
    for (auto& x : V) x = static_cast<int>(rng() % 6);
    CHECK(gale_ryser_check({H, V}) == exists_any_matrix(H, V));
  }
}

TEST_CASE("erdos_gallai_check") {
  CHECK(erdos_gallai_check({3, 3, 3, 3}));
  CHECK_FALSE(erdos_gallai_check({3, 1}));
  CHECK(erdos_gallai_check({2, 2, 2}));
  CHECK_FALSE(erdos_gallai_check({1, 1, 1}));
  CHECK(erdos_gallai_check({1, 2, 1}));
  CHECK(erdos_gallai_check({}));
}

TEST_CASE("erdos_gallai_check agrees with graph enumeration for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::set<std::vector<int>> graphic;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1U) {
          ++deg[static_cast<std::size_t>(pairs[e].first)];
          ++deg[static_cast<std::size_t>(pairs[e].second)];
        }
      }
      std::sort(deg.begin(), deg.end(), std::greater<>());
      graphic.insert(deg);
    }
    // every nonincreasing vector with entries < n
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int cap) {
      if (i == d.size()) {
        CHECK(erdos_gallai_check(d) == (graphic.count(d) > 0));
        return;
      }
      for (int x = 0; x <= cap; ++x) {
        d[i] = x;
        walk(i + 1, x);
      }
    };
    walk(0, n - 1);
  }
}

TEST_CASE("classify_degrees") {
  CHECK(classify_degrees({5, 5, 5}).cls == DegreeClass::regular);
  const auto s = classify_degrees({4, 5, 4});
  CHECK(s.cls == DegreeClass::span_one);
  CHECK(s.was_reordered);
  CHECK(s.sorted == std::vector<int>{5, 4, 4});
  const auto u = classify_degrees({4, 2, 2});
  CHECK(u.cls == DegreeClass::unsupported);
  CHECK(u.reason == "span>1");
  CHECK(classify_degrees({}).cls == DegreeClass::unsupported);
  CHECK_THROWS_AS(classify_degrees({1, -1}), std::invalid_argument);
}

TEST_CASE("check_degrees") {
  const auto a = check_degrees({5, 5, 5, 4, 4, 4, 4, 4, 4}, 3);
  CHECK(a.feasibility.feasible);
  CHECK(a.feasibility.m == 13);
  CHECK(a.degrees.cls == DegreeClass::span_one);

  const auto b = check_degrees(std::vector<int>(6, 6), 2);
  CHECK(b.feasibility.violated == Condition::cond3);
  CHECK(b.feasibility.m == 18);

  const auto c = check_degrees({3, 3, 3}, 2);
  CHECK(c.feasibility.violated == Condition::cond1);
  CHECK_FALSE(c.feasibility.m.has_value());

  const auto d = check_degrees({0, 0, 0}, 2);
  CHECK(d.feasibility.feasible);
  CHECK(d.feasibility.m == 0);

  const auto e = check_degrees({4, 2, 2}, 2);
  CHECK(e.degrees.cls == DegreeClass::unsupported);
  CHECK_FALSE(e.feasibility.feasible);
  CHECK_FALSE(e.feasibility.violated.has_value());
}
