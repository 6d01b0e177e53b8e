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
#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gsqss/access.hpp"
#include "gsqss/errors.hpp"
#include "gsqss/graph.hpp"
#include "gsqss/graph_io.hpp"
#include "gsqss/quantum.hpp"
#include "gsqss/shamir.hpp"
#include "gsqss/threshold.hpp"
#include "gsqss/vertex_set.hpp"

// Threshold quantum secret sharing on a graph state with a classical
// one-time-pad key.
//
// The dealer pads the secret a|0> + b|1> with X^{b_x} Z^{b_z}, embeds the
// result into the graph state as a|G_{b_x}> + b(-1)^{b_z}|G_{1-b_x}>, hands
// one qubit to each of n players and Shamir-shares the two key bits with
// threshold k + c among n + c players. A coalition that holds the key and a
// q-accessing set of qubits moves the secret onto an ancilla using the
// witnesses D_B and C_B, then removes the pad.
namespace gsqss::protocol {

using quantum::amplitude;
using quantum::StateVector;

inline constexpr std::uint64_t kDefaultSeed = 20120101;

struct ProtocolConfig {
  Graph graph;
  VertexSet a;
  std::size_t k = 0;
  std::size_t c = 0;  // players holding a key share but no qubit
  std::uint64_t seed = kDefaultSeed;
  quantum::SimLimits limits{};
};

struct Pad {
  int bx = 0;
  int bz = 0;
  friend bool operator==(const Pad &, const Pad &) = default;
};

inline constexpr std::array<Pad, 4> kAllPads{Pad{0, 0}, Pad{0, 1}, Pad{1, 0}, Pad{1, 1}};

struct LogEntry {
  std::string step;
  std::string detail;
};

struct Transcript {
  ProtocolConfig config;
  amplitude alpha;
  amplitude beta;
  Pad pad;
  StateVector reg;
  std::vector<std::size_t> qubit_holder;  // qubit v is held by player qubit_holder[v]
  std::vector<shamir::ClassicalShare> shares;  // player p holds shares[p]
  std::vector<LogEntry> log;
  double fidelity = -1.0;  // set by the last reconstruction

  std::size_t players() const noexcept { return config.graph.order() + config.c; }
};

struct RecoveredSecret {
  amplitude alpha;
  amplitude beta;
  double fidelity;
  double ancilla_purity;
  std::size_t ancilla_holder;
  VertexSet qubit_coalition;
};

/// Rejects configurations whose threshold k is below the q* threshold of (G, A).
inline void validate(const ProtocolConfig &cfg) {
  const std::size_t n = cfg.graph.order();
  require_same_universe(cfg.graph, cfg.a, "protocol config");
  if (cfg.a.empty()) {
    throw std::invalid_argument("protocol: A must be nonempty");
  }
  if (n > cfg.limits.max_qubits) {
    throw ResourceLimitError("protocol: " + std::to_string(n) + " qubits exceeds simulator limit " +
                             std::to_string(cfg.limits.max_qubits));
  }
  if (cfg.k == 0 || cfg.k > n) {
    throw std::invalid_argument("protocol: need 1 <= k <= n");
  }
  if (n + cfg.c > 255) {
    throw std::invalid_argument("protocol: at most 255 players");
  }
  const auto t = qstar_threshold(cfg.graph, cfg.a);
  if (cfg.k < t.k_star) {
    throw std::invalid_argument("protocol: k = " + std::to_string(cfg.k) + " is below the q* threshold " +
                                std::to_string(t.k_star) + " of (G, A)");
  }
}

/// a|G_{b_x}> + b(-1)^{b_z}|G_{1-b_x}>.
inline StateVector padded_register(const Graph &g, const VertexSet &a, amplitude alpha, amplitude beta, Pad pad,
                                   const quantum::SimLimits &limits = {}) {
  quantum::require_normalized(alpha, beta);
  const auto g0 = quantum::encode_classical(g, a, 0, limits);
  const auto g1 = quantum::encode_classical(g, a, 1, limits);
  const auto &first = pad.bx == 0 ? g0 : g1;
  const auto &second = pad.bx == 0 ? g1 : g0;
  const amplitude b = pad.bz == 0 ? beta : -beta;
  StateVector s(g.order());
  for (std::size_t x = 0; x < s.dim(); ++x) {
    s[x] = alpha * first[x] + b * second[x];
  }
  return s;
}

namespace detail {

/// Players that receive a qubit: all n when c = 0, otherwise n of the n + c
/// players picked by a seeded Fisher-Yates shuffle, assigned in ascending order.
inline std::vector<std::size_t> assign_qubits(std::size_t n, std::size_t c, std::mt19937_64 &rng) {
  std::vector<std::size_t> players(n + c);
  for (std::size_t i = 0; i < players.size(); ++i) {
    players[i] = i;
  }
  if (c == 0) {
    return players;
  }
  for (std::size_t i = players.size(); i-- > 1;) {
    std::swap(players[i], players[rng() % (i + 1)]);
  }
  players.resize(n);
  std::sort(players.begin(), players.end());
  return players;
}

inline Transcript deal_impl(const ProtocolConfig &cfg, amplitude alpha, amplitude beta, const Pad *forced) {
  validate(cfg);
  quantum::require_normalized(alpha, beta);
  std::mt19937_64 rng(cfg.seed);
  Pad pad{static_cast<int>(rng() & 1U), static_cast<int>(rng() & 1U)};
  if (forced != nullptr) {
    pad = *forced;
  }
  Transcript t;
  t.config = cfg;
  t.alpha = alpha;
  t.beta = beta;
  t.pad = pad;
  t.qubit_holder = assign_qubits(cfg.graph.order(), cfg.c, rng);
  t.shares = shamir::share(shamir::pack_pad(pad.bx, pad.bz), cfg.k + cfg.c, t.players(), rng);
  t.reg = padded_register(cfg.graph, cfg.a, alpha, beta, pad, cfg.limits);
  return t;
}

}  // namespace detail

/// Runs encryption, embedding and distribution with a pad drawn from the seed.
inline Transcript deal(const ProtocolConfig &cfg, amplitude alpha, amplitude beta) {
  return detail::deal_impl(cfg, alpha, beta, nullptr);
}

/// As deal(), with the pad fixed by the caller.
inline Transcript deal_with_pad(const ProtocolConfig &cfg, amplitude alpha, amplitude beta, Pad pad) {
  if ((pad.bx != 0 && pad.bx != 1) || (pad.bz != 0 && pad.bz != 1)) {
    throw std::invalid_argument("deal_with_pad: pad bits must be 0 or 1");
  }
  return detail::deal_impl(cfg, alpha, beta, &pad);
}

/// Reconstruction by the players in `coalition` (ids 0..n+c-1). Appends to t.log.
inline RecoveredSecret reconstruct(Transcript &t, std::span<const std::size_t> coalition) {
  const auto &cfg = t.config;
  const auto &g = cfg.graph;
  const std::size_t n = g.order();
  std::set<std::size_t> members;
  for (auto p : coalition) {
    if (p >= t.players()) {
      throw std::invalid_argument("reconstruct: player " + std::to_string(p) + " does not exist");
    }
    members.insert(p);
  }
  const std::size_t needed = cfg.k + cfg.c;
  if (members.size() < needed) {
    throw InsufficientShares("reconstruct: coalition of " + std::to_string(members.size()) +
                             " players is below threshold " + std::to_string(needed));
  }
  VertexSet b(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (members.count(t.qubit_holder[v]) != 0) {
      b.insert(v);
    }
  }
  t.log.push_back({"coalition", "qubits " + b.to_string() + " held by " + std::to_string(members.size()) + " players"});

  const auto w = reconstruction_witnesses(g, cfg.a, b);
  t.log.push_back({"witnesses", "D_B = " + w.d.to_string() + ", C_B = " + w.c.to_string()});

  const auto after_ud = quantum::apply_isometry_ud(t.reg, g, cfg.a, w.d, b);
  t.log.push_back({"isometry U_D", "support " + (w.d | odd_neighborhood(g, w.d)).to_string()});

  const auto after_vc = quantum::apply_controlled_vc(after_ud, g, cfg.a, w.c, b);
  t.log.push_back({"controlled V_C", "support " + (w.c | (odd_neighborhood(g, w.c) ^ cfg.a)).to_string()});

  std::vector<shamir::ClassicalShare> held;
  for (auto p : members) {
    held.push_back(t.shares[p]);
  }
  const std::uint8_t key = shamir::reconstruct(held, needed);
  const Pad pad{key & 1, (key >> 1) & 1};
  t.log.push_back({"classical key", "b_x = " + std::to_string(pad.bx) + ", b_z = " + std::to_string(pad.bz)});

  // The ancilla is qubit n; project the graph register onto |G> to read it.
  const auto graph_state = quantum::graph_state(g, quantum::SimLimits{n});
  const std::size_t half = std::size_t{1} << n;
  std::array<amplitude, 2> anc{};
  for (std::size_t y = 0; y < half; ++y) {
    anc[0] += std::conj(graph_state[y]) * after_vc[y];
    anc[1] += std::conj(graph_state[y]) * after_vc[y | half];
  }
  auto rho = quantum::reduced_density(after_vc, VertexSet(n + 1, {n})).matrix();
  if (pad.bx == 1) {
    std::swap(anc[0], anc[1]);
    rho = rho.colwise().reverse().rowwise().reverse().eval();
  }
  if (pad.bz == 1) {
    anc[1] = -anc[1];
    rho(0, 1) = -rho(0, 1);
    rho(1, 0) = -rho(1, 0);
  }
  Eigen::Vector2cd phi(t.alpha, t.beta);
  const double fidelity = std::clamp((phi.adjoint() * rho * phi)(0, 0).real(), 0.0, 1.0);
  const double purity = (rho * rho).trace().real();
  const std::size_t holder = *members.begin();
  t.log.push_back({"ancilla", "held by player " + std::to_string(holder) + ", fidelity " + std::to_string(fidelity)});
  t.fidelity = fidelity;
  return {anc[0], anc[1], fidelity, purity, holder, b};
}

/// Pad-averaged reduced state of the qubits in `b` for the given secret.
inline quantum::DensityMatrix pad_averaged_state(const ProtocolConfig &cfg, amplitude alpha, amplitude beta,
                                                 const VertexSet &b) {
  Eigen::MatrixXcd acc;
  for (const auto &pad : kAllPads) {
    const auto rho = quantum::reduced_density(padded_register(cfg.graph, cfg.a, alpha, beta, pad, cfg.limits), b);
    acc = acc.size() == 0 ? rho.matrix() : (acc + rho.matrix()).eval();
  }
  return quantum::DensityMatrix(acc / 4.0);
}

using Secret = std::pair<amplitude, amplitude>;

/// Trace distance between the pad-averaged views of `b` for two secrets.
inline double pad_averaged_distance(const ProtocolConfig &cfg, const Secret &s1, const Secret &s2, const VertexSet &b) {
  return quantum::trace_distance(pad_averaged_state(cfg, s1.first, s1.second, b),
                                 pad_averaged_state(cfg, s2.first, s2.second, b));
}

/// Largest distance over every coalition that holds fewer than k + c key
/// shares. Such a coalition learns nothing about the pad, so its view is the
/// pad-averaged state of whichever qubits it holds; any qubit set of size at
/// most min(n, k + c - 1) is reachable.
inline double privacy_probe(const ProtocolConfig &cfg, const Secret &s1, const Secret &s2) {
  const std::size_t n = cfg.graph.order();
  if (n > cfg.limits.max_qubits) {
    throw ResourceLimitError("privacy_probe: register exceeds simulator limit");
  }
  const std::size_t largest = std::min(n, cfg.k + cfg.c - 1);
  double worst = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) <= largest) {
      worst = std::max(worst, pad_averaged_distance(cfg, s1, s2, VertexSet::from_mask(n, mask)));
    }
  }
  return worst;
}

inline nlohmann::json to_json(const Transcript &t) {
  using nlohmann::json;
  json shares = json::array();
  for (std::size_t p = 0; p < t.shares.size(); ++p) {
    shares.push_back({{"player", p}, {"index", t.shares[p].index}, {"value", t.shares[p].value}});
  }
  json log = json::array();
  for (const auto &e : t.log) {
    log.push_back({{"step", e.step}, {"detail", e.detail}});
  }
  json out = {
      {"graph6", serialize_graph6(t.config.graph)},
      {"A", t.config.a.members()},
      {"k", t.config.k},
      {"c", t.config.c},
      {"seed", t.config.seed},
      {"secret", {{"alpha", {t.alpha.real(), t.alpha.imag()}}, {"beta", {t.beta.real(), t.beta.imag()}}}},
      {"pad", {{"b_x", t.pad.bx}, {"b_z", t.pad.bz}}},
      {"qubit_assignment", t.qubit_holder},
      {"shares", shares},
      {"log", log},
  };
  if (t.fidelity >= 0.0) {
    out["fidelity"] = t.fidelity;
  }
  return out;
}

}  // namespace gsqss::protocol
