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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsqss/errors.hpp"
#include "gsqss/gf2.hpp"
#include "gsqss/graph.hpp"
#include "gsqss/vertex_set.hpp"

// Access structure of the graph-state sharing scheme (G, A): the dealer
// encodes the secret by applying Z on every qubit of the nonempty set A.
//
// A coalition B is classically accessing iff some D in B has D + Odd(D) in B
// and |D n A| odd, and blind iff some C outside B has Odd(C) n B = A n B.
// Exactly one of the two holds; which one is decided by two GF(2) ranks on
// the cut matrix. B reconstructs a quantum secret iff B is accessing and its
// complement is not.
namespace gsqss {

enum class CVerdict { Accessing, Blind };
enum class QVerdict { QAccessing, QBlind, Partial };

constexpr std::string_view to_string(CVerdict v) noexcept { return v == CVerdict::Accessing ? "Accessing" : "Blind"; }

constexpr std::string_view to_string(QVerdict v) noexcept {
  switch (v) {
    case QVerdict::QAccessing:
      return "QAccessing";
    case QVerdict::QBlind:
      return "QBlind";
    case QVerdict::Partial:
      return "Partial";
  }
  return "?";
}

/// Result of the classical test. `witness` is D when accessing and C when blind.
struct ClassicalAccess {
  CVerdict verdict;
  VertexSet witness;
  int rank_residual;
};

struct WitnessPair {
  std::optional<VertexSet> accessing;  // D
  std::optional<VertexSet> blind;      // C, outside the coalition
};

struct AccessReport {
  VertexSet coalition;
  CVerdict c_verdict;
  QVerdict q_verdict;
  WitnessPair witnesses;
  int rank_residual;
};

/// D_B and C_B of a q-accessing coalition B, both inside B.
struct ReconstructionWitnesses {
  VertexSet d;
  VertexSet c;
};

namespace detail {

inline void check_scheme(const Graph &g, const VertexSet &a, const VertexSet &b) {
  require_same_universe(g, a, "access structure (A)");
  require_same_universe(g, b, "access structure (B)");
  if (a.empty()) {
    throw std::invalid_argument("the encoding set A must be nonempty");
  }
}

/// Coordinates of `s` on the ordered vertex list `coords`.
inline gf2::BitVector restrict_to(const VertexSet &s, const std::vector<std::size_t> &coords) {
  gf2::BitVector v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (s.contains(coords[i])) {
      v.set(i);
    }
  }
  return v;
}

inline VertexSet lift(const gf2::BitVector &v, const std::vector<std::size_t> &coords, std::size_t universe) {
  VertexSet s(universe);
  for (auto i : v.indices()) {
    s.insert(coords[i]);
  }
  return s;
}

/// (A n B)^T stacked on top of the cut matrix.
inline gf2::BitMatrix stacked_matrix(const gf2::BitMatrix &cut, const gf2::BitVector &a_in_b) {
  gf2::BitMatrix m(cut.rows() + 1, cut.cols());
  if (cut.cols() > 0) {
    m.set_row(0, a_in_b);
    for (std::size_t r = 0; r < cut.rows(); ++r) {
      m.set_row(r + 1, cut.row(r));
    }
  }
  return m;
}

}  // namespace detail

/// Adjacency submatrix with rows indexed by V \ B and columns by B, both ascending.
inline gf2::BitMatrix cut_matrix(const Graph &g, const VertexSet &b) {
  require_same_universe(g, b, "cut_matrix");
  const auto cols = b.members();
  const auto rows = b.complement().members();
  gf2::BitMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (g.adjacent(rows[r], cols[c])) {
        m.set(r, c);
      }
    }
  }
  return m;
}

/// D in B, Odd(D) in B, |D n A| odd.
inline bool is_accessing_witness(const Graph &g, const VertexSet &a, const VertexSet &b, const VertexSet &d) {
  return d.is_subset_of(b) && odd_neighborhood(g, d).is_subset_of(b) && (d & a).size() % 2 == 1;
}

/// C outside B, Odd(C) n B = A n B.
inline bool is_blind_witness(const Graph &g, const VertexSet &a, const VertexSet &b, const VertexSet &c) {
  return !c.intersects(b) && (odd_neighborhood(g, c) & b) == (a & b);
}

/// C in B, Odd(C) n (V \ B) = A n (V \ B).
inline bool is_reconstruction_witness(const Graph &g, const VertexSet &a, const VertexSet &b, const VertexSet &c) {
  const VertexSet out = b.complement();
  return c.is_subset_of(b) && (odd_neighborhood(g, c) & out) == (a & out);
}

/// rank([(A n B)^T ; cut]) - rank(cut); 1 iff B is classically accessing.
inline int rank_residual(const Graph &g, const VertexSet &a, const VertexSet &b) {
  detail::check_scheme(g, a, b);
  const auto cut = cut_matrix(g, b);
  const auto stacked = detail::stacked_matrix(cut, detail::restrict_to(a, b.members()));
  return static_cast<int>(gf2::rank(stacked) - gf2::rank(cut));
}

/// Classical verdict for B together with a verified witness.
inline ClassicalAccess classify_c(const Graph &g, const VertexSet &a, const VertexSet &b) {
  detail::check_scheme(g, a, b);
  const auto in = b.members();
  const auto out = b.complement().members();
  const auto cut = cut_matrix(g, b);
  const auto a_in_b = detail::restrict_to(a, in);
  const auto stacked = detail::stacked_matrix(cut, a_in_b);
  const int residual = static_cast<int>(gf2::rank(stacked) - gf2::rank(cut));

  if (residual == 1) {
    gf2::BitVector rhs(stacked.rows());
    rhs.set(0);
    const auto x = gf2::solve(stacked, rhs);
    if (!x) {
      throw std::logic_error("classify_c: residual 1 but accessing system unsolvable");
    }
    VertexSet d = detail::lift(*x, in, g.order());
    if (!is_accessing_witness(g, a, b, d)) {
      throw std::logic_error("classify_c: accessing witness failed verification");
    }
    return {CVerdict::Accessing, std::move(d), residual};
  }

  const auto x = gf2::solve(cut.transpose(), a_in_b);
  if (!x) {
    throw std::logic_error("classify_c: residual 0 but blind system unsolvable");
  }
  VertexSet c = detail::lift(*x, out, g.order());
  if (!is_blind_witness(g, a, b, c)) {
    throw std::logic_error("classify_c: blind witness failed verification");
  }
  return {CVerdict::Blind, std::move(c), residual};
}

inline bool c_accessing(const Graph &g, const VertexSet &a, const VertexSet &b) { return rank_residual(g, a, b) == 1; }

inline bool q_accessing(const Graph &g, const VertexSet &a, const VertexSet &b) {
  return c_accessing(g, a, b) && !c_accessing(g, a, b.complement());
}

inline QVerdict q_classify(const Graph &g, const VertexSet &a, const VertexSet &b) {
  if (q_accessing(g, a, b)) {
    return QVerdict::QAccessing;
  }
  if (q_accessing(g, a, b.complement())) {
    return QVerdict::QBlind;
  }
  return QVerdict::Partial;
}

inline AccessReport analyze(const Graph &g, const VertexSet &a, const VertexSet &b) {
  auto c = classify_c(g, a, b);
  WitnessPair w;
  if (c.verdict == CVerdict::Accessing) {
    w.accessing = c.witness;
  } else {
    w.blind = c.witness;
  }
  return {b, c.verdict, q_classify(g, a, b), std::move(w), c.rank_residual};
}

/// Witnesses used by the reconstruction: D_B from the accessing verdict of B
/// and C_B from the blind verdict of the complement of B.
inline ReconstructionWitnesses reconstruction_witnesses(const Graph &g, const VertexSet &a, const VertexSet &b) {
  auto inside = classify_c(g, a, b);
  if (inside.verdict != CVerdict::Accessing) {
    throw NoWitnessError("coalition " + b.to_string() + " is not classically accessing");
  }
  auto outside = classify_c(g, a, b.complement());
  if (outside.verdict != CVerdict::Blind) {
    throw NoWitnessError("complement of coalition " + b.to_string() + " is classically accessing");
  }
  if (!is_reconstruction_witness(g, a, b, outside.witness)) {
    throw std::logic_error("reconstruction witness failed verification");
  }
  return {std::move(inside.witness), std::move(outside.witness)};
}

/// Fast access tests for graphs with at most 64 vertices, one word per set.
class AccessOracle {
 public:
  AccessOracle(const Graph &g, const VertexSet &a)
      : n_(g.order()), masks_(g.neighbor_masks()), a_(a.mask()), full_(n_ == 64 ? ~0ULL : (1ULL << n_) - 1) {
    require_same_universe(g, a, "AccessOracle");
    if (a.empty()) {
      throw std::invalid_argument("the encoding set A must be nonempty");
    }
  }

  AccessOracle(std::vector<std::uint64_t> masks, std::uint64_t a)
      : n_(masks.size()), masks_(std::move(masks)), a_(a), full_(n_ == 64 ? ~0ULL : (1ULL << n_) - 1) {}

  std::size_t order() const noexcept { return n_; }
  std::uint64_t full() const noexcept { return full_; }

  /// A n B lies outside the span of the cut-matrix rows {N(v) n B : v not in B}.
  bool c_accessing(std::uint64_t b) const noexcept {
    gf2::WordBasis basis;
    const std::uint64_t target = a_ & b;
    if (target == 0) {
      return false;
    }
    for (std::uint64_t rest = full_ & ~b; rest != 0; rest &= rest - 1) {
      basis.insert(masks_[static_cast<std::size_t>(std::countr_zero(rest))] & b);
    }
    return !basis.contains(target);
  }

  bool q_accessing(std::uint64_t b) const noexcept { return c_accessing(b) && !c_accessing(full_ & ~b); }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> masks_;
  std::uint64_t a_;
  std::uint64_t full_;
};

/// Threshold guaranteed for G1 * G2 when G1 realizes ((k1,n1)) and G2 realizes ((k2,n2)).
struct ThresholdParams {
  std::uint64_t n;
  std::uint64_t k;
  friend bool operator==(const ThresholdParams &, const ThresholdParams &) = default;
};

inline ThresholdParams product_threshold_bound(std::uint64_t n1, std::uint64_t k1, std::uint64_t n2, std::uint64_t k2) {
  if (k1 == 0 || k1 > n1 || k2 == 0 || k2 > n2) {
    throw std::invalid_argument("product_threshold_bound: need 0 < k_i <= n_i");
  }
  const std::uint64_t n = n1 * n2;
  return {n, n - (n1 - k1 + 1) * (n2 - k2 + 1) + 1};
}

/// Iterates the product bound: G^{*i} from G realizing ((k,n)).
inline ThresholdParams power_threshold_bound(std::uint64_t n, std::uint64_t k, std::size_t i) {
  if (i == 0) {
    throw std::invalid_argument("power_threshold_bound: exponent must be at least 1");
  }
  ThresholdParams p{n, k};
  for (std::size_t j = 1; j < i; ++j) {
    p = product_threshold_bound(n, k, p.n, p.k);
  }
  return p;
}

enum class WitnessKind { OddWiseOddSize, EvenWise };

constexpr std::string_view to_string(WitnessKind k) noexcept {
  return k == WitnessKind::OddWiseOddSize ? "odd-wise-odd-size" : "even-wise";
}

struct SmallWitness {
  VertexSet set;
  WitnessKind kind;
};

/// D in B with D + Odd(D) in B.
inline bool is_odd_wise(const Graph &g, const VertexSet &b, const VertexSet &d) {
  return d.is_subset_of(b) && odd_neighborhood(g, d).is_subset_of(b);
}

/// C in B with C + Even(C) in B, where Even(C) = V \ Odd(C).
inline bool is_even_wise(const Graph &g, const VertexSet &b, const VertexSet &c) {
  return c.is_subset_of(b) && even_neighborhood(g, c).is_subset_of(b);
}

namespace detail {

/// For equal-size sets, the one holding the smallest element of the
/// symmetric difference has the lexicographically smaller member list.
inline bool lex_less_same_size(const gf2::BitVector &x, const gf2::BitVector &y) {
  const auto diff = (x ^ y).first_set();
  return diff && x.test(*diff);
}

}  // namespace detail

/// Minimum-cardinality set among the odd-size B-odd-wise sets and the
/// nonempty B-even-wise sets. Ties prefer odd-wise, then the
/// lexicographically smallest member list. Both families are cosets of the
/// kernel of the cut matrix, which is enumerated in Gray-code order.
inline SmallWitness small_witness(const Graph &g, const VertexSet &b, std::size_t max_kernel_dim = 24) {
  require_same_universe(g, b, "small_witness");
  const auto in = b.members();
  const auto out = b.complement().members();
  const auto cut = cut_matrix(g, b);
  const auto kernel = gf2::kernel_basis(cut);
  if (kernel.size() > max_kernel_dim) {
    throw ResourceLimitError("small_witness: kernel dimension " + std::to_string(kernel.size()) +
                             " exceeds limit " + std::to_string(max_kernel_dim));
  }
  gf2::BitVector ones(out.size());
  ones.flip_all();
  const auto particular = gf2::solve(cut, ones);

  std::optional<gf2::BitVector> best;
  WitnessKind best_kind = WitnessKind::OddWiseOddSize;
  auto consider = [&](const gf2::BitVector &x, WitnessKind kind) {
    const std::size_t size = x.count();
    if (best) {
      const std::size_t best_size = best->count();
      if (size > best_size) {
        return;
      }
      if (size == best_size) {
        if (kind != best_kind) {
          if (kind == WitnessKind::EvenWise) {
            return;
          }
        } else if (!detail::lex_less_same_size(x, *best)) {
          return;
        }
      }
    }
    best = x;
    best_kind = kind;
  };

  gf2::BitVector current(in.size());
  gf2::BitVector shifted = particular ? *particular : gf2::BitVector(in.size());
  const std::uint64_t count = std::uint64_t{1} << kernel.size();
  for (std::uint64_t step = 0; step < count; ++step) {
    if (step > 0) {
      const auto flip = static_cast<std::size_t>(std::countr_zero(step));
      current ^= kernel[flip];
      shifted ^= kernel[flip];
    }
    if (current.count() % 2 == 1) {
      consider(current, WitnessKind::OddWiseOddSize);
    }
    if (particular && shifted.any()) {
      consider(shifted, WitnessKind::EvenWise);
    }
  }
  if (!best) {
    throw NoWitnessError("no odd-wise set of odd size and no nonempty even-wise set in " + b.to_string());
  }
  VertexSet x = detail::lift(*best, in, g.order());
  const bool ok = best_kind == WitnessKind::OddWiseOddSize ? (is_odd_wise(g, b, x) && x.size() % 2 == 1)
                                                           : (is_even_wise(g, b, x) && !x.empty());
  if (!ok) {
    throw std::logic_error("small_witness: witness failed verification");
  }
  return {std::move(x), best_kind};
}

}  // namespace gsqss
