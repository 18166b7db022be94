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

#include "hyrec/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hyrec/numbers.hpp"

namespace hyrec {

namespace {

std::string describe(const Feasibility& f) {
  std::string s = "infeasible instance";
  if (f.violated) s += " (" + std::string(to_string(*f.violated)) + ")";
  return s;
}

// Appends the rows of `block`, each repeated `times` times along the row.
void append_repeated(BinaryMatrix& out, const BinaryMatrix& block, int times) {
  for (const auto& r : block.rows()) out.add_row(repeat(r, times));
}

VerifyReport fail(std::string what) { return {false, std::move(what)}; }

VerifyReport verify_shape(const BinaryMatrix& a, int n, int h, long long m,
                          std::vector<int> degrees) {
  if (a.col_count() != n) {
    return fail("column count " + std::to_string(a.col_count()) + " != " +
                std::to_string(n));
  }
  if (!a.has_distinct_rows()) return fail("duplicate rows");
  const auto rs = a.row_sums();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i] != h) {
      return fail("row sum " + std::to_string(rs[i]) + " != " + std::to_string(h) +
                  " at row " + std::to_string(i + 1));
    }
  }
  if (a.row_count() != m) {
    return fail("row count " + std::to_string(a.row_count()) + " != " +
                std::to_string(m));
  }
  auto cs = a.column_sums();
  std::sort(cs.begin(), cs.end(), std::greater<>());
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  if (cs != degrees) return fail("column sum multiset differs from the degree vector");
  return {};
}

}  // namespace

InfeasibleError::InfeasibleError(Feasibility f)
    : std::invalid_argument(describe(f)), feasibility_(f) {}

Reconstruction rec_regular_planned(const RegularInstance& inst) {
  const auto feas = check_regular(inst);
  if (!feas.feasible) throw InfeasibleError(feas);
  const auto [n, m, h, v] = inst;
  Reconstruction out{BinaryMatrix(n), {}, std::nullopt};

  if (m == 0) return out;
  if (h == 0 || h == n) {
    // m == 1 here: the single all-zero or all-one row.
    out.matrix.add_row(BinaryWord::zeros_then_ones(n - h, h));
    return out;
  }

  long long remaining = v;
  for (int d : common_divisors(n, h)) {
    LevelStep step;
    step.divisor = d;
    step.length = n / d;
    step.density = h / d;
    step.lyndon_count = count_lyndon({step.length, step.density});
    step.remaining_before = remaining;

    const long long per_class = step.density;
    const auto available = static_cast<long long>(step.lyndon_count);
    const long long q = std::min(remaining / per_class, available);
    const long long left = remaining - q * per_class;
    const bool partial = left > 0 && q < available;
    step.full_necklaces = static_cast<int>(q);

    const BinaryWord reserved =
        BinaryWord::zeros_then_ones(step.length - step.density, step.density);
    FixedDensityStream stream({step.length, step.density}, WordKind::lyndon);
    while (static_cast<long long>(step.words.size()) < q) {
      auto u = stream.next();
      if (!u) throw InternalError("Lyndon stream ended early");
      if (*u == reserved) {
        if (partial) continue;  // kept back for the coset blocks below
        step.reserved_row = out.matrix.row_count();
      }
      step.words.push_back(*u);
      out.matrix.append(shift_matrix(repeat(*u, d)));
    }
    remaining = left;

    if (partial) {
      const int g = std::gcd(step.length, step.density);
      if ((left * g) % step.density != 0) {
        throw InternalError("partial fill is not integral");
      }
      step.partial_blocks = static_cast<int>(left * g / step.density);
      step.reserved_row = out.matrix.row_count();
      step.reserved_as_blocks = true;
      for (int j = 0; j < step.partial_blocks; ++j) {
        append_repeated(out.matrix, block_submatrix(step.length, step.density, j), d);
      }
      remaining = 0;
    }
    out.plan.levels.push_back(std::move(step));
    if (remaining == 0) break;
  }

  if (remaining != 0) {
    throw InternalError("levels exhausted with column sum " + std::to_string(remaining) +
                        " still uncovered");
  }
  if (out.matrix.row_count() != m) {
    throw InternalError("constructed " + std::to_string(out.matrix.row_count()) +
                        " rows, expected " + std::to_string(m));
  }
  return out;
}

BinaryMatrix rec_regular(const RegularInstance& inst) {
  return rec_regular_planned(inst).matrix;
}

Reconstruction rec_span_one_planned(const SpanOneInstance& inst) {
  const auto feas = check_span_one(inst);
  if (!feas.feasible) throw InfeasibleError(feas);
  const int n = inst.n;
  const int h = inst.h;
  const long long m = *feas.m;

  SpanOnePlan sp;
  const long long step = std::lcm(static_cast<long long>(n), static_cast<long long>(h));
  sp.k = (h * m / step + 1) * step;
  sp.m_prime = sp.k / h;
  sp.v_prime = sp.k / n;
  sp.t = sp.m_prime - m;
  if (static_cast<long long>(n) * (sp.v_prime - inst.v) + inst.n1 != sp.t * h) {
    throw InternalError("deletion count does not match the column deficit");
  }

  Reconstruction out = rec_regular_planned({n, sp.m_prime, h, sp.v_prime});
  if (out.plan.levels.empty() || !out.plan.levels.front().reserved_row) {
    throw InternalError("0^{n-h}1^h material missing from the regular matrix");
  }
  const LevelStep& first = out.plan.levels.front();
  const int base = *first.reserved_row;
  const int coset_rows = n / std::gcd(n, h);
  if (sp.t >= coset_rows) {
    throw InternalError("deletion count reaches the coset block size");
  }

  // Remove s^0(u), s^{-h}(u), s^{-2h}(u), ...: t consecutive members of the
  // coset block, so every column loses v'-v or v'-v+1 ones.
  std::vector<int> doomed;
  for (long long i = 0; i < sp.t; ++i) {
    int offset;
    if (first.reserved_as_blocks) {
      offset = static_cast<int>((coset_rows - i) % coset_rows);
    } else {
      offset = static_cast<int>(((-(i * h)) % n + n) % n);
    }
    doomed.push_back(base + offset);
    sp.deleted_rows.push_back(out.matrix.row(base + offset));
  }
  const BinaryMatrix trimmed = out.matrix.without_rows(doomed);

  const auto sums = trimmed.column_sums();
  sp.column_order.resize(static_cast<std::size_t>(n));
  std::iota(sp.column_order.begin(), sp.column_order.end(), 0);
  std::stable_sort(sp.column_order.begin(), sp.column_order.end(), [&](int a, int b) {
    return sums[static_cast<std::size_t>(a)] > sums[static_cast<std::size_t>(b)];
  });
  out.matrix = trimmed.permute_columns(sp.column_order);
  out.span_one = std::move(sp);

  const auto report = verify(out.matrix, inst);
  if (!report) throw InternalError("span-one result fails verification: " + report.diagnostic);
  return out;
}

BinaryMatrix rec_span_one(const SpanOneInstance& inst) {
  return rec_span_one_planned(inst).matrix;
}

VerifyReport verify(const BinaryMatrix& matrix, const RegularInstance& expected) {
  return verify_shape(matrix, expected.n, expected.h, expected.m,
                      std::vector<int>(static_cast<std::size_t>(expected.n),
                                       static_cast<int>(expected.v)));
}

VerifyReport verify(const BinaryMatrix& matrix, const SpanOneInstance& expected) {
  const auto m = expected.rows();
  if (!m) return fail("instance has no integral row count");
  return verify_shape(matrix, expected.n, expected.h, *m, expected.degrees());
}

BinaryMatrix twin_free_bipartite(int n, int k) {
  if (k <= 0 || k >= n) {
    throw std::invalid_argument("twin-free bipartite graph needs 0 < k < n");
  }
  return rec_regular({n, n, k, k});
}

}  // namespace hyrec
