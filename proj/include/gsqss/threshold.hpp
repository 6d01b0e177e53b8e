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
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gsqss/access.hpp"
#include "gsqss/errors.hpp"
#include "gsqss/graph.hpp"
#include "gsqss/vertex_set.hpp"

namespace gsqss {

struct ThresholdOptions {
  std::size_t max_vertices = 26;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct ThresholdReport {
  std::size_t k_star = 0;
  /// Lexicographically first coalition of size k_star - 1 that is not q-accessing.
  std::optional<VertexSet> certificate_fail;
  /// Coalitions examined, counted as a sequential lexicographic scan would.
  std::uint64_t sets_checked = 0;
};

namespace combinations {

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r / i * (n - k + i) + r % i * (n - k + i) / i;
  }
  return r;
}

/// k-subset of {0..n-1} with the given rank in lexicographic order.
inline std::vector<std::size_t> unrank(std::size_t n, std::size_t k, std::uint64_t rank) {
  std::vector<std::size_t> comb(k);
  std::size_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (;; ++x) {
      const std::uint64_t with_x = binomial(n - x - 1, k - i - 1);
      if (rank < with_x) {
        comb[i] = x++;
        break;
      }
      rank -= with_x;
    }
  }
  return comb;
}

/// Advances to the lexicographic successor; false after the last subset.
inline bool next(std::vector<std::size_t> &comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) {
        comb[j] = comb[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

inline std::uint64_t to_mask(const std::vector<std::size_t> &comb) {
  std::uint64_t m = 0;
  for (auto v : comb) {
    m |= std::uint64_t{1} << v;
  }
  return m;
}

}  // namespace combinations

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) {
    return requested;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

struct LevelFailure {
  std::uint64_t rank;
  std::uint64_t mask;
};

/// Lexicographically first size-k coalition that is not q-accessing. Chunks
/// of the rank space are handed out in order; a chunk past the earliest
/// failing chunk is skipped, so the answer does not depend on scheduling.
inline std::optional<LevelFailure> first_failure(const AccessOracle &oracle, std::size_t k, unsigned threads) {
  const std::size_t n = oracle.order();
  const std::uint64_t total = combinations::binomial(n, k);
  constexpr std::uint64_t kChunk = 1 << 14;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  std::vector<LevelFailure> found(chunks, LevelFailure{kNone, 0});
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> earliest{kNone};

  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunks || c > earliest.load()) {
        return;
      }
      const std::uint64_t begin = c * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      auto comb = combinations::unrank(n, k, begin);
      for (std::uint64_t r = begin; r < end; ++r) {
        const std::uint64_t mask = combinations::to_mask(comb);
        if (!oracle.q_accessing(mask)) {
          found[c] = {r, mask};
          std::uint64_t seen = earliest.load();
          while (c < seen && !earliest.compare_exchange_weak(seen, c)) {
          }
          break;
        }
        combinations::next(comb, n);
      }
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), chunks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back(work);
    }
  }
  const std::uint64_t c = earliest.load();
  if (c == kNone) {
    return std::nullopt;
  }
  return found[c];
}

inline ThresholdReport threshold_scan(const AccessOracle &oracle, unsigned threads) {
  const std::size_t n = oracle.order();
  ThresholdReport report;
  report.k_star = n;
  report.sets_checked = 1;  // the full vertex set, always q-accessing
  for (std::size_t k = n; k-- > 0;) {
    if (auto fail = first_failure(oracle, k, threads)) {
      report.k_star = k + 1;
      report.certificate_fail = VertexSet::from_mask(n, fail->mask);
      report.sets_checked += fail->rank + 1;
      return report;
    }
    report.sets_checked += combinations::binomial(n, k);
  }
  return report;
}

}  // namespace detail

/// Smallest k such that every coalition of size k is q-accessing. Sizes are
/// scanned downward from n until a failing coalition turns up; the scan
/// relies on q-accessibility being closed under supersets.
inline ThresholdReport qstar_threshold(const Graph &g, const VertexSet &a, const ThresholdOptions &opts = {}) {
  require_same_universe(g, a, "qstar_threshold");
  const std::size_t cap = std::min<std::size_t>(opts.max_vertices, 64);
  if (g.order() > cap) {
    throw ResourceLimitError("qstar_threshold: " + std::to_string(g.order()) + " vertices exceeds enumeration limit " +
                             std::to_string(cap));
  }
  AccessOracle oracle(g, a);
  auto report = detail::threshold_scan(oracle, opts.threads);
  if (report.certificate_fail && q_accessing(g, a, *report.certificate_fail)) {
    throw std::logic_error("qstar_threshold: failure certificate is q-accessing");
  }
  return report;
}

struct SearchReport {
  std::size_t n = 0;
  std::uint64_t graphs = 0;
  std::size_t min_k_star = 0;
  std::map<std::size_t, std::uint64_t> histogram;  // k_star -> number of labelled graphs
  std::vector<Graph> attainers;                    // graphs achieving min_k_star, by index
};

struct SearchOptions {
  std::size_t max_n = 7;
  unsigned threads = 0;
};

/// Labelled graph number `index` on n vertices: bit p of the index is the
/// p-th pair in the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline Graph graph_from_index(std::size_t n, std::uint64_t index) {
  Graph g(n);
  std::size_t p = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++p) {
      if ((index >> p) & 1U) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

/// q* threshold of every labelled graph on n vertices with A = V.
inline SearchReport exhaustive_graph_search(std::size_t n, const SearchOptions &opts = {}) {
  if (n == 0) {
    throw std::invalid_argument("exhaustive_graph_search: n must be at least 1");
  }
  if (n > opts.max_n || n > 11) {
    throw ResourceLimitError("exhaustive_graph_search: n = " + std::to_string(n) + " exceeds limit " +
                             std::to_string(std::min<std::size_t>(opts.max_n, 11)));
  }
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::vector<std::uint8_t> k_star(total, 0);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  std::atomic<std::uint64_t> next{0};
  constexpr std::uint64_t kChunk = 256;
  auto work = [&] {
    std::vector<std::uint64_t> masks(n);
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= total) {
        return;
      }
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::fill(masks.begin(), masks.end(), 0);
        std::size_t p = 0;
        for (std::size_t u = 0; u < n; ++u) {
          for (std::size_t v = u + 1; v < n; ++v, ++p) {
            if ((idx >> p) & 1U) {
              masks[u] |= std::uint64_t{1} << v;
              masks[v] |= std::uint64_t{1} << u;
            }
          }
        }
        AccessOracle oracle(masks, full);
        k_star[idx] = static_cast<std::uint8_t>(detail::threshold_scan(oracle, 1).k_star);
      }
    }
  };
  const unsigned workers = detail::resolve_threads(opts.threads);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back(work);
    }
  }

  SearchReport report;
  report.n = n;
  report.graphs = total;
  report.min_k_star = n;
  for (auto k : k_star) {
    ++report.histogram[k];
    report.min_k_star = std::min<std::size_t>(report.min_k_star, k);
  }
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (k_star[idx] == report.min_k_star) {
      report.attainers.push_back(graph_from_index(n, idx));
    }
  }
  return report;
}

}  // namespace gsqss
