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
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsqss/gf2.hpp"

namespace gsqss {

/// Subset of the vertex labels 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members) : bits_(universe) {
    for (auto v : members) {
      insert(v);
    }
  }

  static VertexSet from_members(std::size_t universe, std::span<const std::size_t> members) {
    VertexSet s(universe);
    for (auto v : members) {
      s.insert(v);
    }
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.flip_all();
    return s;
  }

  static VertexSet from_bits(gf2::BitVector bits) {
    VertexSet s;
    s.bits_ = std::move(bits);
    return s;
  }

  /// Requires universe <= 64; bit i of `mask` is vertex i.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) {
      throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
    }
    if (universe < 64 && (mask >> universe) != 0) {
      throw std::invalid_argument("VertexSet::from_mask: mask has bits outside the universe");
    }
    VertexSet s(universe);
    if (universe > 0) {
      s.bits_.words()[0] = mask;
    }
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(std::size_t v) const { return v < universe() && bits_.test(v); }

  void insert(std::size_t v) {
    check(v);
    bits_.set(v);
  }
  void erase(std::size_t v) {
    check(v);
    bits_.set(v, false);
  }
  void toggle(std::size_t v) {
    check(v);
    bits_.flip(v);
  }

  VertexSet complement() const {
    VertexSet s = *this;
    s.bits_.flip_all();
    return s;
  }

  bool is_subset_of(const VertexSet &other) const { return (*this & other) == *this; }
  bool intersects(const VertexSet &other) const { return !(*this & other).empty(); }

  std::vector<std::size_t> members() const { return bits_.indices(); }

  std::uint64_t mask() const {
    if (universe() > 64) {
      throw std::logic_error("VertexSet::mask: universe exceeds 64");
    }
    return universe() == 0 ? 0 : bits_.words()[0];
  }

  const gf2::BitVector &bits() const noexcept { return bits_; }

  VertexSet &operator&=(const VertexSet &o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet &operator|=(const VertexSet &o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet &operator^=(const VertexSet &o) {
    bits_ ^= o.bits_;
    return *this;
  }
  VertexSet &operator-=(const VertexSet &o) {
    bits_ &= o.complement().bits_;
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet &b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }
  friend bool operator==(const VertexSet &, const VertexSet &) = default;

  /// Lexicographic order on the ascending member lists.
  friend bool lex_less(const VertexSet &a, const VertexSet &b) {
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

  /// "{0,2,3}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto v : members()) {
      if (!first) {
        s += ',';
      }
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  void check(std::size_t v) const {
    if (v >= universe()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe()));
    }
  }

  gf2::BitVector bits_;
};

}  // namespace gsqss
