// Copyright 2026 The gsqss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact evaluation of the counting condition that every graph realizing a
// ((k,n)) threshold with A = V must satisfy:
//
//   C(n,k) <= 2 * sum_{i=1}^{floor(2(n-k+1)/3)} C(n,i) * C(k-1, 2k-n-1)
//
// Each size-k coalition contains a small odd-wise or even-wise witness, and
// each small set can complete to at most C(k-1, 2k-n-1) coalitions.
namespace gsqss::bounds {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

struct BoundReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t sum_limit = 0;  // floor(2(n-k+1)/3)
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

inline std::size_t sum_limit(std::size_t n, std::size_t k) { return 2 * (n - k + 1) / 3; }

/// Requires n/2 < k <= n.
inline BoundReport counting_inequality(std::size_t n, std::size_t k) {
  if (k > n || 2 * k <= n) {
    throw std::invalid_argument("counting_inequality: need n/2 < k <= n (got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
  }
  BoundReport r;
  r.n = n;
  r.k = k;
  r.sum_limit = sum_limit(n, k);
  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(k);
  r.lhs = binomial(nn, kk);
  BigInt sum = 0;
  BigInt term = 1;  // C(n, i), built incrementally
  for (std::int64_t i = 1; i <= static_cast<std::int64_t>(r.sum_limit); ++i) {
    term *= nn - i + 1;
    term /= i;
    sum += term;
  }
  r.rhs = 2 * sum * binomial(kk - 1, 2 * kk - nn - 1);
  r.holds = r.lhs <= r.rhs;
  return r;
}

/// Smallest k in (n/2, n] satisfying the counting condition, if any.
inline std::optional<std::size_t> min_feasible_k(std::size_t n) {
  if (n == 0) {
    return std::nullopt;
  }
  const auto nn = static_cast<std::int64_t>(n);
  // prefix[m] = sum_{i=1}^{m} C(n, i)
  const std::size_t max_limit = sum_limit(n, n / 2 + 1);
  std::vector<BigInt> prefix(max_limit + 1);
  BigInt term = 1;
  for (std::size_t i = 1; i <= max_limit; ++i) {
    term *= nn - static_cast<std::int64_t>(i) + 1;
    term /= static_cast<std::int64_t>(i);
    prefix[i] = prefix[i - 1] + term;
  }
  std::size_t k = n / 2 + 1;
  BigInt lhs = binomial(nn, static_cast<std::int64_t>(k));
  for (; k <= n; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    const BigInt rhs = 2 * prefix[sum_limit(n, k)] * binomial(kk - 1, 2 * kk - nn - 1);
    if (lhs <= rhs) {
      return k;
    }
    lhs *= nn - kk;
    lhs /= kk + 1;
  }
  return std::nullopt;
}

/// Largest k allowed when a ((k, 2k-1)) scheme must also satisfy k >= r n
/// for a constant r = num/den > 1/2: k <= r / (2r - 1), i.e. floor(num / (2 num - den)).
inline std::size_t pure_cutoff_k(std::uint64_t num, std::uint64_t den) {
  if (2 * num <= den) {
    throw std::invalid_argument("pure_cutoff_k: ratio must exceed 1/2");
  }
  return static_cast<std::size_t>(num / (2 * num - den));
}

struct PureScanRow {
  std::size_t k;
  std::size_t n;
  bool holds;
};

struct PureFeasibilityReport {
  std::size_t max_k = 0;
  std::vector<PureScanRow> rows;
  /// Largest n = 2k-1 in the scan that passes the counting condition.
  std::optional<std::size_t> largest_feasible_n;
  /// Smallest n from which every scanned n fails.
  std::optional<std::size_t> failing_from_n;
  // Cutoff arithmetic from the asymptotic constants.
  std::size_t cutoff_k_from_157 = 0;  // k >= n/2 + n/157
  std::size_t cutoff_n_from_157 = 0;
  std::size_t cutoff_k_from_79_156 = 0;  // k >= 79n/156
  std::size_t cutoff_n_from_79_156 = 0;
  std::size_t stated_cutoff_n = 79;
  bool exact_scan_matches_stated = false;
};

/// Scans ((k, 2k-1)) for k = 1..max_k against the counting condition and sets
/// the exact result beside the cutoff obtained from the asymptotic bound.
inline PureFeasibilityReport pure_qss_feasibility(std::size_t max_k = 100) {
  PureFeasibilityReport r;
  r.max_k = max_k;
  for (std::size_t k = 1; k <= max_k; ++k) {
    const std::size_t n = 2 * k - 1;
    const bool holds = counting_inequality(n, k).holds;
    r.rows.push_back({k, n, holds});
    if (holds) {
      r.largest_feasible_n = n;
    }
  }
  for (auto it = r.rows.rbegin(); it != r.rows.rend() && !it->holds; ++it) {
    r.failing_from_n = it->n;
  }
  // n/2 + n/157 = 159 n / 314
  r.cutoff_k_from_157 = pure_cutoff_k(159, 314);
  r.cutoff_n_from_157 = 2 * r.cutoff_k_from_157 - 1;
  r.cutoff_k_from_79_156 = pure_cutoff_k(79, 156);
  r.cutoff_n_from_79_156 = 2 * r.cutoff_k_from_79_156 - 1;
  r.exact_scan_matches_stated =
      r.failing_from_n.has_value() && r.failing_from_n == r.stated_cutoff_n;
  return r;
}

}  // namespace gsqss::bounds
