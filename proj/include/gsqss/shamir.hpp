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
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsqss/errors.hpp"

/// Shamir threshold sharing over GF(2^8).
namespace gsqss::shamir {

/// Arithmetic modulo x^8 + x^4 + x^3 + x + 1.
namespace gf256 {

inline constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) noexcept {
  std::uint8_t p = 0;
  while (b != 0) {
    if (b & 1U) {
      p ^= a;
    }
    const bool carry = a & 0x80U;
    a = static_cast<std::uint8_t>(a << 1);
    if (carry) {
      a ^= 0x1B;
    }
    b >>= 1;
  }
  return p;
}

inline constexpr std::uint8_t pow(std::uint8_t a, unsigned e) noexcept {
  std::uint8_t r = 1;
  while (e != 0) {
    if (e & 1U) {
      r = mul(r, a);
    }
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint8_t inv(std::uint8_t a) {
  if (a == 0) {
    throw std::domain_error("gf256::inv: zero has no inverse");
  }
  return pow(a, 254);
}

/// Horner evaluation; coeffs[0] is the constant term.
inline std::uint8_t eval(std::span<const std::uint8_t> coeffs, std::uint8_t x) noexcept {
  std::uint8_t y = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    y = static_cast<std::uint8_t>(mul(y, x) ^ coeffs[i]);
  }
  return y;
}

}  // namespace gf256

struct ClassicalShare {
  std::uint8_t index;  // evaluation point, 1..255
  std::uint8_t value;
  friend bool operator==(const ClassicalShare &, const ClassicalShare &) = default;
};

/// Share i (1-based) is the evaluation at i of a random polynomial of degree
/// k-1 whose constant term is `secret`. Consumes k-1 draws of `rng`.
inline std::vector<ClassicalShare> share(std::uint8_t secret, std::size_t k, std::size_t n, std::mt19937_64 &rng) {
  if (k == 0 || k > n || n > 255) {
    throw std::invalid_argument("shamir::share: need 1 <= k <= n <= 255");
  }
  std::vector<std::uint8_t> coeffs(k);
  coeffs[0] = secret;
  for (std::size_t i = 1; i < k; ++i) {
    coeffs[i] = static_cast<std::uint8_t>(rng() & 0xFFU);
  }
  std::vector<ClassicalShare> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto x = static_cast<std::uint8_t>(i);
    out.push_back({x, gf256::eval(coeffs, x)});
  }
  return out;
}

/// Lagrange interpolation at 0 over the k shares with the smallest indices.
inline std::uint8_t reconstruct(std::span<const ClassicalShare> shares, std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("shamir::reconstruct: threshold must be at least 1");
  }
  std::set<std::uint8_t> seen;
  for (const auto &s : shares) {
    if (s.index == 0) {
      throw std::invalid_argument("shamir::reconstruct: share index 0 is not a valid evaluation point");
    }
    if (!seen.insert(s.index).second) {
      throw std::invalid_argument("shamir::reconstruct: duplicate share index " + std::to_string(s.index));
    }
  }
  if (shares.size() < k) {
    throw InsufficientShares("shamir::reconstruct: " + std::to_string(shares.size()) + " shares, threshold " +
                             std::to_string(k));
  }
  std::vector<ClassicalShare> used(shares.begin(), shares.end());
  std::sort(used.begin(), used.end(), [](const auto &l, const auto &r) { return l.index < r.index; });
  used.resize(k);

  std::uint8_t secret = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint8_t num = 1;
    std::uint8_t den = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) {
        num = gf256::mul(num, used[j].index);
        den = gf256::mul(den, used[j].index ^ used[i].index);
      }
    }
    secret ^= gf256::mul(used[i].value, gf256::mul(num, gf256::inv(den)));
  }
  return secret;
}

/// Bit 0 carries b_x, bit 1 carries b_z.
inline constexpr std::uint8_t pack_pad(int bx, int bz) noexcept {
  return static_cast<std::uint8_t>((bx & 1) | ((bz & 1) << 1));
}

/// Two bytes per share: index, value.
inline std::vector<std::uint8_t> serialize(std::span<const ClassicalShare> shares) {
  std::vector<std::uint8_t> out;
  out.reserve(2 * shares.size());
  for (const auto &s : shares) {
    out.push_back(s.index);
    out.push_back(s.value);
  }
  return out;
}

inline std::vector<ClassicalShare> deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() % 2 != 0) {
    throw std::invalid_argument("shamir::deserialize: odd byte count");
  }
  std::vector<ClassicalShare> out;
  for (std::size_t i = 0; i < bytes.size(); i += 2) {
    out.push_back({bytes[i], bytes[i + 1]});
  }
  return out;
}

}  // namespace gsqss::shamir
