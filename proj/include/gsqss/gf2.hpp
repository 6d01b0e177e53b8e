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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/// Dense linear algebra over GF(2) on word-packed bit rows.
namespace gsqss::gf2 {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

/// Fixed-length vector over GF(2). Bits past `size()` are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

  static BitVector from_indices(std::size_t len, std::span<const std::size_t> indices) {
    BitVector v(len);
    for (auto i : indices) {
      v.set(i);
    }
    return v;
  }

  static BitVector from_indices(std::size_t len, std::initializer_list<std::size_t> indices) {
    return from_indices(len, std::span<const std::size_t>(indices.begin(), indices.size()));
  }

  /// "0110" -> bit 0 clear, bits 1 and 2 set. Character i is coordinate i.
  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
      }
    }
    return v;
  }

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  bool operator[](std::size_t i) const { return test(i); }

  void set(std::size_t i, bool value = true) {
    check_index(i);
    const word_t bit = word_t{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }

  void flip(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] ^= word_t{1} << (i % kWordBits);
  }

  void flip_all() noexcept {
    for (auto &w : words_) {
      w = ~w;
    }
    clear_tail();
  }

  void reset() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](word_t w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  /// Parity of the coordinate-wise product, i.e. the GF(2) inner product.
  bool dot(const BitVector &other) const {
    check_same_size(other);
    word_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
  }

  BitVector &operator^=(const BitVector &other) {
    check_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] ^= other.words_[i];
    }
    return *this;
  }
  BitVector &operator&=(const BitVector &other) {
    check_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= other.words_[i];
    }
    return *this;
  }
  BitVector &operator|=(const BitVector &other) {
    check_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= other.words_[i];
    }
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector &b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector &b) { return a |= b; }

  friend bool operator==(const BitVector &, const BitVector &) = default;

  std::span<const word_t> words() const noexcept { return words_; }
  std::span<word_t> words() noexcept { return words_; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (word_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
    return out;
  }

  std::optional<std::size_t> first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return std::nullopt;
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
      if (test(i)) {
        s[i] = '1';
      }
    }
    return s;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= len_) {
      throw std::out_of_range("BitVector index " + std::to_string(i) + " >= length " + std::to_string(len_));
    }
  }
  void check_same_size(const BitVector &other) const {
    if (other.len_ != len_) {
      throw std::invalid_argument("BitVector length mismatch");
    }
  }
  void clear_tail() noexcept {
    if (len_ % kWordBits != 0) {
      words_.back() &= (word_t{1} << (len_ % kWordBits)) - 1;
    }
  }

  std::size_t len_ = 0;
  std::vector<word_t> words_;
};

/// Row-major GF(2) matrix, each row padded to a whole number of words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i);
    }
    return m;
  }

  /// All rows must share one length; an empty list gives a 0x0 matrix.
  static BitMatrix from_rows(std::span<const BitVector> rows) {
    if (rows.empty()) {
      return {};
    }
    BitMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      m.set_row(r, rows[r]);
    }
    return m;
  }

  static BitMatrix from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> vs;
    vs.reserve(rows.size());
    for (auto r : rows) {
      vs.push_back(BitVector::from_string(r));
    }
    return from_rows(vs);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool test(std::size_t r, std::size_t c) const {
    check(r, c);
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  bool operator()(std::size_t r, std::size_t c) const { return test(r, c); }

  void set(std::size_t r, std::size_t c, bool value = true) {
    check(r, c);
    const word_t bit = word_t{1} << (c % kWordBits);
    auto &w = data_[r * stride_ + c / kWordBits];
    w = value ? (w | bit) : (w & ~bit);
  }

  std::span<const word_t> row_words(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<word_t> row_words(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }

  BitVector row(std::size_t r) const {
    BitVector v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
  }

  void set_row(std::size_t r, const BitVector &v) {
    if (v.size() != cols_) {
      throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    }
    std::copy(v.words().begin(), v.words().end(), row_words(r).begin());
  }

  void xor_row(std::size_t dst, std::size_t src) noexcept {
    word_t *d = data_.data() + dst * stride_;
    const word_t *s = data_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) {
      d[w] ^= s[w];
    }
  }

  void swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a != b) {
      std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                       data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                       data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
    }
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (test(r, c)) {
          t.set(c, r);
        }
      }
    }
    return t;
  }

  /// Copy with one extra column holding `column`.
  BitMatrix augmented(const BitVector &column) const {
    if (column.size() != rows_) {
      throw std::invalid_argument("BitMatrix::augmented: column length must equal row count");
    }
    BitMatrix m(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      auto src = row_words(r);
      std::copy(src.begin(), src.end(), m.row_words(r).begin());
      if (column.test(r)) {
        m.set(r, cols_);
      }
    }
    return m;
  }

  friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
      throw std::out_of_range("BitMatrix index out of range");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<word_t> data_;
};

namespace detail {

/// Reduced row echelon form over the first `pivot_cols` columns, choosing
/// pivots from the highest column index down. Row i of the result has its
/// pivot at `pivots[i]`; rows past `pivots.size()` are zero on those columns.
inline std::vector<std::size_t> reduce_descending(BitMatrix &m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = pivot_cols; c-- > 0 && r < m.rows();) {
    std::size_t p = r;
    while (p < m.rows() && !m.test(p, c)) {
      ++p;
    }
    if (p == m.rows()) {
      continue;
    }
    m.swap_rows(r, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m.test(i, c)) {
        m.xor_row(i, r);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Dimension of the row space.
inline std::size_t rank(BitMatrix m) {
  const std::size_t stride = words_for(m.cols());
  std::size_t r = 0;
  for (std::size_t w = 0; w < stride && r < m.rows(); ++w) {
    for (std::size_t b = 0; b < kWordBits && r < m.rows(); ++b) {
      const word_t bit = word_t{1} << b;
      std::size_t p = r;
      while (p < m.rows() && !(m.row_words(p)[w] & bit)) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      m.swap_rows(r, p);
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m.row_words(i)[w] & bit) {
          m.xor_row(i, r);
        }
      }
      ++r;
    }
  }
  return r;
}

inline BitVector mat_vec(const BitMatrix &m, const BitVector &x) {
  if (x.size() != m.cols()) {
    throw std::invalid_argument("mat_vec: vector length must equal column count");
  }
  BitVector y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row_words(r);
    auto xs = x.words();
    word_t acc = 0;
    for (std::size_t w = 0; w < row.size(); ++w) {
      acc ^= row[w] & xs[w];
    }
    if (std::popcount(acc) & 1) {
      y.set(r);
    }
  }
  return y;
}

/// Some x with m.x = b, or nullopt if b is outside the column space. Among
/// all solutions the lexicographically smallest is returned, reading
/// coordinate 0 as the most significant digit.
inline std::optional<BitVector> solve(const BitMatrix &m, const BitVector &b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("solve: right-hand side length must equal row count");
  }
  BitMatrix aug = m.augmented(b);
  // Descending pivots express each pivot variable through lower-index free
  // variables only, so zeroing every free variable is lexicographically minimal.
  const auto pivots = detail::reduce_descending(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug.test(r, m.cols())) {
      return std::nullopt;
    }
  }
  BitVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (aug.test(r, m.cols())) {
      x.set(pivots[r]);
    }
  }
  return x;
}

/// Basis of {x : m.x = 0}, one vector per free column in ascending order.
inline std::vector<BitVector> kernel_basis(const BitMatrix &m) {
  BitMatrix work = m;
  const auto pivots = detail::reduce_descending(work, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<BitVector> basis;
  basis.reserve(m.cols() - pivots.size());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) {
      continue;
    }
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (work.test(r, f)) {
        v.set(pivots[r]);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Incremental XOR basis for vectors that fit in one machine word. Each
/// stored vector has a distinct leading bit, so reduction is one pass.
class WordBasis {
 public:
  /// Reduces v against the basis; zero means v is in the span.
  word_t reduce(word_t v) const noexcept {
    for (std::size_t i = 0; i < size_; ++i) {
      v = std::min(v, v ^ vectors_[i]);
    }
    return v;
  }

  /// Returns false if v was already in the span.
  bool insert(word_t v) noexcept {
    v = reduce(v);
    if (v == 0) {
      return false;
    }
    // Keep vectors ordered by decreasing leading bit so min() reduces correctly.
    std::size_t pos = size_;
    while (pos > 0 && vectors_[pos - 1] < v) {
      vectors_[pos] = vectors_[pos - 1];
      --pos;
    }
    vectors_[pos] = v;
    ++size_;
    return true;
  }

  bool contains(word_t v) const noexcept { return reduce(v) == 0; }
  std::size_t rank() const noexcept { return size_; }

 private:
  word_t vectors_[kWordBits] = {};
  std::size_t size_ = 0;
};

}  // namespace gsqss::gf2
