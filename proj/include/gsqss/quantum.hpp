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
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gsqss/access.hpp"
#include "gsqss/errors.hpp"
#include "gsqss/graph.hpp"
#include "gsqss/vertex_set.hpp"

// Dense statevector simulation of graph states.
//
// Basis state x has qubit i on bit i of x (qubit 0 least significant); qubit i
// is held by vertex i. Ancillas are appended as the highest qubit.
namespace gsqss::quantum {

using amplitude = std::complex<double>;

/// Algebraic identities hold to this accuracy.
inline constexpr double kAlgebraicTol = 1e-12;
/// Quantities that should vanish (overlap, distance, impurity) are zero below this.
inline constexpr double kZeroTol = 1e-10;

struct SimLimits {
  std::size_t max_qubits = 12;
};

class StateVector {
 public:
  StateVector() = default;
  /// |0...0> on `qubits` qubits.
  explicit StateVector(std::size_t qubits) : qubits_(qubits), amps_(std::size_t{1} << qubits) {
    if (qubits > 30) {
      throw ResourceLimitError("StateVector: " + std::to_string(qubits) + " qubits is too many");
    }
    amps_[0] = 1.0;
  }

  static StateVector from_amplitudes(std::size_t qubits, std::vector<amplitude> amps) {
    if (amps.size() != (std::size_t{1} << qubits)) {
      throw std::invalid_argument("StateVector: amplitude count must be 2^qubits");
    }
    StateVector s;
    s.qubits_ = qubits;
    s.amps_ = std::move(amps);
    return s;
  }

  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }

  amplitude operator[](std::size_t x) const { return amps_.at(x); }
  amplitude &operator[](std::size_t x) { return amps_.at(x); }

  std::span<const amplitude> amplitudes() const noexcept { return amps_; }
  std::span<amplitude> amplitudes() noexcept { return amps_; }

  double norm() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
      acc += std::norm(a);
    }
    return std::sqrt(acc);
  }

 private:
  std::size_t qubits_ = 0;
  std::vector<amplitude> amps_;
};

/// <a|b>
inline amplitude inner(const StateVector &a, const StateVector &b) {
  if (a.qubits() != b.qubits()) {
    throw std::invalid_argument("inner: qubit count mismatch");
  }
  amplitude acc = 0.0;
  auto x = a.amplitudes();
  auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += std::conj(x[i]) * y[i];
  }
  return acc;
}

/// Squared distance |a - b|^2.
inline double distance_squared(const StateVector &a, const StateVector &b) {
  if (a.qubits() != b.qubits()) {
    throw std::invalid_argument("distance_squared: qubit count mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    acc += std::norm(a[i] - b[i]);
  }
  return acc;
}

/// phase * X_x Z_z; Z acts first. Supports are masks over the qubits.
struct PauliOp {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int phase = 1;

  static PauliOp from_sets(const VertexSet &x, const VertexSet &z, int phase = 1) {
    if (phase != 1 && phase != -1) {
      throw std::invalid_argument("PauliOp: phase must be +1 or -1");
    }
    return {x.mask(), z.mask(), phase};
  }

  std::uint64_t support() const noexcept { return x | z; }
};

inline StateVector apply_pauli(const StateVector &s, const PauliOp &p) {
  if (p.phase != 1 && p.phase != -1) {
    throw std::invalid_argument("apply_pauli: phase must be +1 or -1");
  }
  if (s.qubits() < 64 && (p.support() >> s.qubits()) != 0) {
    throw std::invalid_argument("apply_pauli: support outside register");
  }
  StateVector out(s.qubits());
  auto in = s.amplitudes();
  auto dst = out.amplitudes();
  for (std::size_t y = 0; y < in.size(); ++y) {
    const bool flip = std::popcount(y & p.z) & 1;
    const double sign = (flip ? -1.0 : 1.0) * p.phase;
    dst[y ^ p.x] = sign * in[y];
  }
  return out;
}

/// Edges of the subgraph induced by d.
inline std::size_t induced_edge_count(const Graph &g, const VertexSet &d) {
  std::size_t twice = 0;
  for (auto v : d.members()) {
    twice += (g.neighbors(v) & d).size();
  }
  return twice / 2;
}

/// The graph-state stabilizer (-1)^{|E(G[D])|} X_D Z_{Odd(D)}, Z acting first.
/// The sign counts induced edges: |D n Odd(D)| is always even.
inline PauliOp stabilizer(const Graph &g, const VertexSet &d) {
  return PauliOp::from_sets(d, odd_neighborhood(g, d), induced_edge_count(g, d) % 2 == 0 ? 1 : -1);
}

namespace detail {

inline void check_qubits(std::size_t n, const SimLimits &limits) {
  if (n > limits.max_qubits) {
    throw ResourceLimitError("simulation of " + std::to_string(n) + " qubits exceeds limit " +
                             std::to_string(limits.max_qubits));
  }
}

}  // namespace detail

/// 2^{-n/2} sum_x (-1)^{q(x)} |x>, q(x) = number of edges inside the support of x.
inline StateVector graph_state(const Graph &g, const SimLimits &limits = {}) {
  detail::check_qubits(g.order(), limits);
  const std::size_t n = g.order();
  const auto masks = g.neighbor_masks();
  StateVector s(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << n));
  auto amps = s.amplitudes();
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    std::uint64_t twice_edges = 0;
    for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
      twice_edges += static_cast<std::uint64_t>(std::popcount(masks[std::countr_zero(rest)] & x));
    }
    amps[x] = (twice_edges / 2) % 2 == 0 ? scale : -scale;
  }
  return s;
}

/// |G_s> = Z_A^s |G>.
inline StateVector encode_classical(const Graph &g, const VertexSet &a, int bit, const SimLimits &limits = {}) {
  require_same_universe(g, a, "encode_classical");
  if (a.empty()) {
    throw std::invalid_argument("encode_classical: A must be nonempty");
  }
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("encode_classical: secret must be 0 or 1");
  }
  auto s = graph_state(g, limits);
  return bit == 0 ? s : apply_pauli(s, PauliOp{0, a.mask(), 1});
}

inline void require_normalized(amplitude alpha, amplitude beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kAlgebraicTol) {
    throw std::invalid_argument("secret amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
  }
}

/// alpha |G_0> + beta |G_1>.
inline StateVector embed_secret(const Graph &g, const VertexSet &a, amplitude alpha, amplitude beta,
                                const SimLimits &limits = {}) {
  require_normalized(alpha, beta);
  const auto g0 = encode_classical(g, a, 0, limits);
  const auto g1 = encode_classical(g, a, 1, limits);
  StateVector s(g.order());
  for (std::size_t x = 0; x < s.dim(); ++x) {
    s[x] = alpha * g0[x] + beta * g1[x];
  }
  return s;
}

class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
      throw std::invalid_argument("DensityMatrix must be square");
    }
  }

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd &matrix() const noexcept { return m_; }
  amplitude operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  amplitude trace() const { return m_.trace(); }
  double purity() const { return (m_ * m_).trace().real(); }

  bool is_hermitian(double tol = kAlgebraicTol) const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol; }

  Eigen::VectorXd eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
  }

 private:
  Eigen::MatrixXcd m_;
};

/// Partial trace over the qubits outside `keep`. Row/column index bit t
/// is the t-th smallest member of `keep`.
inline DensityMatrix reduced_density(const StateVector &s, const VertexSet &keep) {
  if (keep.universe() != s.qubits()) {
    throw std::invalid_argument("reduced_density: set universe must equal qubit count");
  }
  const auto kept = keep.members();
  const auto traced = keep.complement().members();
  auto scatter = [](std::uint64_t local, const std::vector<std::size_t> &positions) {
    std::uint64_t out = 0;
    for (std::size_t t = 0; t < positions.size(); ++t) {
      if ((local >> t) & 1U) {
        out |= std::uint64_t{1} << positions[t];
      }
    }
    return out;
  };
  const std::size_t dim = std::size_t{1} << kept.size();
  const std::size_t env = std::size_t{1} << traced.size();
  std::vector<std::uint64_t> row_index(dim);
  std::vector<std::uint64_t> env_index(env);
  for (std::size_t i = 0; i < dim; ++i) {
    row_index[i] = scatter(i, kept);
  }
  for (std::size_t e = 0; e < env; ++e) {
    env_index[e] = scatter(e, traced);
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  auto amps = s.amplitudes();
  for (std::size_t e = 0; e < env; ++e) {
    for (std::size_t i = 0; i < dim; ++i) {
      const amplitude ai = amps[row_index[i] | env_index[e]];
      if (ai == amplitude{}) {
        continue;
      }
      for (std::size_t j = 0; j < dim; ++j) {
        rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
            ai * std::conj(amps[row_index[j] | env_index[e]]);
      }
    }
  }
  return DensityMatrix(std::move(rho));
}

/// Re tr(rho sigma).
inline double overlap(const DensityMatrix &rho, const DensityMatrix &sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("overlap: dimension mismatch");
  }
  return (rho.matrix() * sigma.matrix()).trace().real();
}

/// Trace norm of rho - sigma (sum of absolute eigenvalues, range [0, 2]).
inline double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  return DensityMatrix(rho.matrix() - sigma.matrix()).eigenvalues().cwiseAbs().sum();
}

struct Distinguishability {
  double overlap;
  double distance;
};

/// How well coalition B tells |G_0> from |G_1>: overlap 0 means perfectly,
/// distance 0 means not at all.
inline Distinguishability distinguishability(const Graph &g, const VertexSet &a, const VertexSet &b,
                                             const SimLimits &limits = {}) {
  require_same_universe(g, b, "distinguishability");
  const auto rho0 = reduced_density(encode_classical(g, a, 0, limits), b);
  const auto rho1 = reduced_density(encode_classical(g, a, 1, limits), b);
  return {overlap(rho0, rho1), trace_distance(rho0, rho1)};
}

/// Outcome of measuring the stabilizer of D on |G_s>; eigenvalue (-1)^s reads as s.
inline int measure_access_observable(const StateVector &s, const Graph &g, const VertexSet &a, const VertexSet &d) {
  require_same_universe(g, a, "measure_access_observable");
  if (s.qubits() != g.order()) {
    throw std::invalid_argument("measure_access_observable: register size must equal graph order");
  }
  if ((d & a).size() % 2 != 1) {
    throw std::invalid_argument("measure_access_observable: |D n A| must be odd");
  }
  const auto image = apply_pauli(s, stabilizer(g, d));
  const amplitude expectation = inner(s, image);
  for (int sign : {1, -1}) {
    StateVector scaled = s;
    for (auto &amp : scaled.amplitudes()) {
      amp *= static_cast<double>(sign);
    }
    if (distance_squared(image, scaled) <= kZeroTol) {
      return sign == 1 ? 0 : 1;
    }
  }
  throw ProtocolStateError("register is not an eigenstate of the access observable (expectation " +
                           std::to_string(expectation.real()) + ")");
}

namespace detail {

inline void require_local(const VertexSet &support, const VertexSet &coalition, const char *step) {
  if (!support.is_subset_of(coalition)) {
    throw LocalityViolation(std::string(step) + ": operator support " + support.to_string() +
                            " leaves coalition " + coalition.to_string());
  }
}

}  // namespace detail

/// U_D = |0> (x) P_0 + |1> (x) P_1 with P_i = (I + (-1)^i O_D) / 2. The
/// ancilla becomes qubit n.
inline StateVector apply_isometry_ud(const StateVector &s, const Graph &g, const VertexSet &a, const VertexSet &d,
                                     const VertexSet &coalition) {
  require_same_universe(g, coalition, "apply_isometry_ud");
  if (s.qubits() != g.order()) {
    throw std::invalid_argument("apply_isometry_ud: register size must equal graph order");
  }
  if (!is_accessing_witness(g, a, coalition, d)) {
    detail::require_local(d | odd_neighborhood(g, d), coalition, "isometry U_D");
    throw std::invalid_argument("apply_isometry_ud: D is not an accessing witness (|D n A| even)");
  }
  const auto g0 = encode_classical(g, a, 0, SimLimits{g.order()});
  const auto g1 = encode_classical(g, a, 1, SimLimits{g.order()});
  const double in_span = std::norm(inner(g0, s)) + std::norm(inner(g1, s));
  if (std::abs(in_span - 1.0) > 1e-9) {
    throw ProtocolStateError("apply_isometry_ud: register is not in span{|G_0>, |G_1>}");
  }
  const auto image = apply_pauli(s, stabilizer(g, d));
  const std::size_t n = g.order();
  StateVector out(n + 1);
  for (std::size_t y = 0; y < s.dim(); ++y) {
    out[y] = 0.5 * (s[y] + image[y]);
    out[y | (std::size_t{1} << n)] = 0.5 * (s[y] - image[y]);
  }
  return out;
}

/// |0><0| (x) I + |1><1| (x) V_C with V_C = (-1)^{|E(G[C])|} X_C Z_{Odd(C) ^ A},
/// controlled on the ancilla (qubit n).
inline StateVector apply_controlled_vc(const StateVector &s, const Graph &g, const VertexSet &a, const VertexSet &c,
                                       const VertexSet &coalition) {
  require_same_universe(g, coalition, "apply_controlled_vc");
  const std::size_t n = g.order();
  if (s.qubits() != n + 1) {
    throw std::invalid_argument("apply_controlled_vc: register must hold the graph qubits plus one ancilla");
  }
  const VertexSet odd = odd_neighborhood(g, c);
  const VertexSet z = odd ^ a;
  detail::require_local(c | z, coalition, "controlled V_C");
  const PauliOp v = PauliOp::from_sets(c, z, induced_edge_count(g, c) % 2 == 0 ? 1 : -1);

  const std::size_t half = std::size_t{1} << n;
  StateVector lower(n);
  for (std::size_t y = 0; y < half; ++y) {
    lower[y] = s[y | half];
  }
  const auto moved = apply_pauli(lower, v);
  StateVector out = s;
  for (std::size_t y = 0; y < half; ++y) {
    out[y | half] = moved[y];
  }
  return out;
}

/// "index re im" per line, index in the qubit-0-least-significant convention.
inline std::string dump_state(const StateVector &s) {
  std::string out = "# qubits " + std::to_string(s.qubits()) + ", qubit i = bit i of index\n";
  char buf[96];
  for (std::size_t x = 0; x < s.dim(); ++x) {
    std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", x, s[x].real(), s[x].imag());
    out += buf;
  }
  return out;
}

}  // namespace gsqss::quantum
