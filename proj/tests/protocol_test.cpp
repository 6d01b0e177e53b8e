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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "gsqss/errors.hpp"
#include "gsqss/protocol.hpp"
#include "oracles.hpp"

using namespace gsqss;
using namespace gsqss::protocol;
using quantum::kAlgebraicTol;
using quantum::kZeroTol;

namespace {

ProtocolConfig c5_config(std::size_t c = 0) {
  ProtocolConfig cfg;
  cfg.graph = family::cycle(5);
  cfg.a = VertexSet::full(5);
  cfg.k = 3;
  cfg.c = c;
  return cfg;
}

Secret random_secret(std::mt19937_64 &rng) {
  std::normal_distribution<double> nd;
  amplitude a{nd(rng), nd(rng)};
  amplitude b{nd(rng), nd(rng)};
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  return {a / norm, b / norm};
}

}  // namespace

TEST(PaddedRegister, Pads) {
  const auto g = family::cycle(5);
  const auto a = VertexSet::full(5);
  const amplitude alpha = 0.6;
  const amplitude beta{0, 0.8};
  const auto g0 = quantum::encode_classical(g, a, 0);
  const auto g1 = quantum::encode_classical(g, a, 1);
  EXPECT_LE(quantum::distance_squared(padded_register(g, a, alpha, beta, {0, 0}),
                                      quantum::embed_secret(g, a, alpha, beta)),
            kAlgebraicTol);
  const auto flipped = padded_register(g, a, alpha, beta, {1, 0});
  EXPECT_NEAR(std::abs(quantum::inner(g1, flipped) - alpha), 0, kAlgebraicTol);
  EXPECT_NEAR(std::abs(quantum::inner(g0, flipped) - beta), 0, kAlgebraicTol);
  const auto phased = padded_register(g, a, alpha, beta, {1, 1});
  EXPECT_NEAR(std::abs(quantum::inner(g0, phased) + beta), 0, kAlgebraicTol);
}

TEST(PaddedRegister, AverageHidesSecret) {
  auto cfg = c5_config();
  const auto all = VertexSet::full(5);
  const auto rho1 = pad_averaged_state(cfg, 1.0, 0.0, all);
  const auto rho2 = pad_averaged_state(cfg, 0.6, amplitude(0, 0.8), all);
  EXPECT_LT(quantum::trace_distance(rho1, rho2), kZeroTol);
  EXPECT_NEAR(rho1.purity(), 0.5, kAlgebraicTol);
}

TEST(Protocol, C5ReconstructsForEveryThreeSet) {
  auto cfg = c5_config();
  std::mt19937_64 rng(81);
  for (const auto &pad : kAllPads) {
    const auto [alpha, beta] = random_secret(rng);
    for (std::uint32_t m = 0; m < 32; ++m) {
      if (std::popcount(m) != 3) {
        continue;
      }
      auto t = deal_with_pad(cfg, alpha, beta, pad);
      std::vector<std::size_t> players;
      for (std::size_t p = 0; p < 5; ++p) {
        if ((m >> p) & 1U) {
          players.push_back(p);
        }
      }
      const auto r = reconstruct(t, players);
      EXPECT_GE(r.fidelity, 1 - 1e-9);
      EXPECT_NEAR(r.ancilla_purity, 1.0, 1e-9);
      EXPECT_NEAR(std::abs(r.alpha - alpha), 0, 1e-9);
      EXPECT_NEAR(std::abs(r.beta - beta), 0, 1e-9);
      EXPECT_EQ(r.ancilla_holder, players.front());
      EXPECT_EQ(r.qubit_coalition.mask(), m);
      EXPECT_EQ(t.fidelity, r.fidelity);
    }
  }
}

TEST(Protocol, SmallCoalitionRejected) {
  auto cfg = c5_config();
  auto t = deal(cfg, 1.0, 0.0);
  const std::vector<std::size_t> two{0, 1};
  EXPECT_THROW(reconstruct(t, two), InsufficientShares);
  const std::vector<std::size_t> bogus{0, 1, 9};
  EXPECT_THROW(reconstruct(t, bogus), std::invalid_argument);
}

TEST(Protocol, KeyOnlyPlayers) {
  auto cfg = c5_config(2);
  std::mt19937_64 rng(82);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    cfg.seed = seed;
    const auto [alpha, beta] = random_secret(rng);
    auto t = deal(cfg, alpha, beta);
    EXPECT_EQ(t.players(), 7U);
    EXPECT_EQ(t.shares.size(), 7U);
    EXPECT_EQ(t.qubit_holder.size(), 5U);
    EXPECT_TRUE(std::is_sorted(t.qubit_holder.begin(), t.qubit_holder.end()));
    for (std::uint32_t m = 0; m < 128; ++m) {
      if (std::popcount(m) != 5) {
        continue;
      }
      std::vector<std::size_t> players;
      std::size_t qubits = 0;
      for (std::size_t p = 0; p < 7; ++p) {
        if ((m >> p) & 1U) {
          players.push_back(p);
          qubits += std::count(t.qubit_holder.begin(), t.qubit_holder.end(), p);
        }
      }
      // Five players always hold at least three of the five qubits.
      ASSERT_GE(qubits, 3U);
      EXPECT_GE(reconstruct(t, players).fidelity, 1 - 1e-9);
    }
  }
}

TEST(Protocol, RandomGraphsAtTheirThreshold) {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 8;
    ProtocolConfig cfg;
    cfg.graph = oracle::random_graph(n, rng);
    cfg.a = oracle::random_nonempty_subset(n, rng);
    cfg.k = qstar_threshold(cfg.graph, cfg.a).k_star;
    cfg.c = rng() % 3;
    cfg.seed = rng();
    const auto [alpha, beta] = random_secret(rng);
    auto tr = deal(cfg, alpha, beta);
    std::vector<std::size_t> players(tr.players());
    std::iota(players.begin(), players.end(), 0);
    std::shuffle(players.begin(), players.end(), rng);
    players.resize(cfg.k + cfg.c);
    // A coalition may hold fewer than k qubits; it is then not authorized.
    std::size_t qubits = 0;
    for (auto p : players) {
      qubits += std::count(tr.qubit_holder.begin(), tr.qubit_holder.end(), p);
    }
    if (qubits < cfg.k) {
      continue;
    }
    EXPECT_GE(reconstruct(tr, players).fidelity, 1 - 1e-9);
  }
}

TEST(Protocol, Validation) {
  auto cfg = c5_config();
  cfg.k = 2;
  EXPECT_THROW(deal(cfg, 1.0, 0.0), std::invalid_argument);
  cfg.k = 6;
  EXPECT_THROW(deal(cfg, 1.0, 0.0), std::invalid_argument);
  cfg = c5_config();
  cfg.a = VertexSet(5);
  EXPECT_THROW(deal(cfg, 1.0, 0.0), std::invalid_argument);
  cfg = c5_config();
  cfg.limits.max_qubits = 4;
  EXPECT_THROW(deal(cfg, 1.0, 0.0), ResourceLimitError);
  EXPECT_THROW(deal(c5_config(), 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(deal_with_pad(c5_config(), 1.0, 0.0, {2, 0}), std::invalid_argument);
}

TEST(Privacy, ProbeExamples) {
  const Secret s1{1.0, 0.0};
  const Secret s2{0.0, 1.0};
  const Secret s3{1 / std::sqrt(2.0), amplitude(0, 1 / std::sqrt(2.0))};
  EXPECT_LT(privacy_probe(c5_config(), s1, s2), kZeroTol);
  EXPECT_LT(privacy_probe(c5_config(), s1, s3), kZeroTol);
  EXPECT_LT(privacy_probe(c5_config(2), s2, s3), kZeroTol);
  // A k = 3 coalition holding three qubits of C5 would tell |0> from |1>, but
  // without the pad it sees nothing: the pad-averaged view of all 5 qubits
  // is still secret-independent.
  EXPECT_LT(pad_averaged_distance(c5_config(), s1, s2, VertexSet::full(5)), kZeroTol);
}

TEST(Transcript, JsonAndDeterminism) {
  auto cfg = c5_config(2);
  cfg.seed = 11;
  auto t1 = deal(cfg, 0.6, 0.8);
  auto t2 = deal(cfg, 0.6, 0.8);
  EXPECT_EQ(t1.pad, t2.pad);
  EXPECT_EQ(t1.qubit_holder, t2.qubit_holder);
  EXPECT_EQ(t1.shares, t2.shares);
  const auto j0 = to_json(t1);
  EXPECT_FALSE(j0.contains("fidelity"));
  const std::vector<std::size_t> players{0, 1, 2, 3, 4, 5, 6};
  reconstruct(t1, players);
  const auto j = to_json(t1);
  EXPECT_EQ(j["graph6"], "Dhc");
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["c"], 2);
  EXPECT_EQ(j["seed"], 11);
  EXPECT_EQ(j["shares"].size(), 7U);
  EXPECT_EQ(j["qubit_assignment"].size(), 5U);
  EXPECT_EQ(j["log"].size(), 6U);
  EXPECT_EQ(j["log"][0]["step"], "coalition");
  EXPECT_NEAR(j["fidelity"].get<double>(), 1.0, 1e-9);
  EXPECT_EQ(j["pad"]["b_x"], t1.pad.bx);
  reconstruct(t2, players);
  EXPECT_EQ(to_json(t2).dump(), j.dump());
}
