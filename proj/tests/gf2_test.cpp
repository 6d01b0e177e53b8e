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

#include <random>
#include <vector>

#include "gsqss/gf2.hpp"
#include "oracles.hpp"

using namespace gsqss::gf2;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, rng() & 1U);
    }
  }
  return m;
}

std::vector<std::vector<int>> to_ints(const BitMatrix &m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r][c] = m.test(r, c) ? 1 : 0;
    }
  }
  return out;
}

// cut matrix of C5 for B = {0,1,2}: rows 3 and 4
BitMatrix c5_cut() { return BitMatrix::from_strings({"001", "100"}); }

}  // namespace

TEST(BitVector, BasicOps) {
  auto v = BitVector::from_string("0110");
  EXPECT_EQ(v.size(), 4U);
  EXPECT_FALSE(v.test(0));
  EXPECT_TRUE(v.test(1));
  EXPECT_EQ(v.count(), 2U);
  EXPECT_EQ(v.to_string(), "0110");
  EXPECT_EQ(v.indices(), (std::vector<std::size_t>{1, 2}));
  v.flip(0);
  EXPECT_EQ(v.to_string(), "1110");
  v.flip_all();
  EXPECT_EQ(v.to_string(), "0001");
  EXPECT_EQ(v.first_set(), 3U);
  const auto w = BitVector::from_string("0101");
  EXPECT_EQ((v ^ w).to_string(), "0100");
  EXPECT_EQ((v & w).to_string(), "0001");
  EXPECT_EQ((v | w).to_string(), "0101");
  EXPECT_TRUE(v.dot(w));
  EXPECT_THROW(BitVector::from_string("012"), std::invalid_argument);
  EXPECT_THROW(v.test(4), std::out_of_range);
}

TEST(BitVector, FlipAllKeepsTailClear) {
  BitVector v(70);
  v.flip_all();
  EXPECT_EQ(v.count(), 70U);
  BitVector u(70);
  u.set(69);
  EXPECT_NE(u, v);
  v.flip_all();
  EXPECT_TRUE(v.none());
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(BitMatrix::identity(3)), 3U);
  EXPECT_EQ(rank(BitMatrix::from_strings({"11", "11"})), 1U);
  EXPECT_EQ(rank(c5_cut()), 2U);
  EXPECT_EQ(rank(BitMatrix(0, 5)), 0U);
  EXPECT_EQ(rank(BitMatrix(5, 0)), 0U);
  EXPECT_EQ(rank(BitMatrix()), 0U);
}

TEST(Rank, MatchesTextbookEliminationAndTranspose) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = rng() % 70;
    const std::size_t cols = rng() % 70;
    const auto m = random_matrix(rows, cols, rng);
    const auto r = rank(m);
    EXPECT_EQ(r, oracle::rank(to_ints(m)));
    EXPECT_EQ(r, rank(m.transpose()));
    EXPECT_LE(r, std::min(rows, cols));
  }
}

TEST(Solve, Examples) {
  const auto x = solve(BitMatrix::identity(3), BitVector::from_string("101"));
  ASSERT_TRUE(x);
  EXPECT_EQ(x->to_string(), "101");

  const auto y = solve(BitMatrix::from_strings({"11"}), BitVector::from_string("1"));
  ASSERT_TRUE(y);
  EXPECT_EQ(y->to_string(), "01");

  EXPECT_FALSE(solve(BitMatrix::from_strings({"10", "10"}), BitVector::from_string("10")));
  EXPECT_THROW(solve(BitMatrix::identity(3), BitVector(2)), std::invalid_argument);
}

TEST(Solve, EmptySystems) {
  const auto x = solve(BitMatrix(0, 3), BitVector(0));
  ASSERT_TRUE(x);
  EXPECT_EQ(x->to_string(), "000");
  EXPECT_TRUE(solve(BitMatrix(2, 0), BitVector(2)));
  EXPECT_FALSE(solve(BitMatrix(2, 0), BitVector::from_string("01")));
}

// Lexicographically smallest with coordinate 0 most significant, i.e. the
// solution whose string is smallest.
TEST(Solve, LexSmallestAgainstExhaustiveSearch) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = 1 + rng() % 10;
    const std::size_t cols = 1 + rng() % 12;
    const auto m = random_matrix(rows, cols, rng);
    BitVector b(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      b.set(i, rng() & 1U);
    }
    std::optional<std::string> best;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cols); ++bits) {
      BitVector x(cols);
      for (std::size_t i = 0; i < cols; ++i) {
        x.set(i, (bits >> i) & 1U);
      }
      if (mat_vec(m, x) == b && (!best || x.to_string() < *best)) {
        best = x.to_string();
      }
    }
    const auto x = solve(m, b);
    ASSERT_EQ(x.has_value(), best.has_value());
    if (x) {
      EXPECT_EQ(mat_vec(m, *x), b);
      EXPECT_EQ(x->to_string(), *best);
    }
  }
}

TEST(KernelBasis, Examples) {
  EXPECT_TRUE(kernel_basis(BitMatrix::identity(2)).empty());
  const auto k = kernel_basis(c5_cut());
  ASSERT_EQ(k.size(), 1U);
  EXPECT_EQ(k[0].to_string(), "010");
  EXPECT_EQ(kernel_basis(BitMatrix(1, 3)).size(), 3U);
}

TEST(KernelBasis, DimensionAndMembership) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rows = rng() % 65;
    const std::size_t cols = rng() % 65;
    const auto m = random_matrix(rows, cols, rng);
    const auto basis = kernel_basis(m);
    EXPECT_EQ(rank(m) + basis.size(), cols);
    for (const auto &v : basis) {
      EXPECT_TRUE(mat_vec(m, v).none());
    }
    if (!basis.empty()) {
      EXPECT_EQ(rank(BitMatrix::from_rows(basis)), basis.size());
    }
  }
}

TEST(MatVec, Examples) {
  const auto x = BitVector::from_string("1011");
  EXPECT_EQ(mat_vec(BitMatrix::identity(4), x), x);
  EXPECT_TRUE(mat_vec(c5_cut(), BitVector::from_string("010")).none());
  EXPECT_EQ(mat_vec(c5_cut(), BitVector::from_string("100")).to_string(), "01");
  EXPECT_THROW(mat_vec(c5_cut(), BitVector(2)), std::invalid_argument);
}

TEST(BitMatrix, AccessorsAndShapeChecks) {
  auto m = BitMatrix::from_strings({"101", "010"});
  EXPECT_EQ(m.rows(), 2U);
  EXPECT_EQ(m.cols(), 3U);
  EXPECT_EQ(m.row(0).to_string(), "101");
  m.xor_row(0, 1);
  EXPECT_EQ(m.row(0).to_string(), "111");
  m.swap_rows(0, 1);
  EXPECT_EQ(m.row(0).to_string(), "010");
  EXPECT_EQ(m.transpose().row(2).to_string(), "01");
  EXPECT_EQ(m.augmented(BitVector::from_string("11")).row(0).to_string(), "0101");
  EXPECT_THROW(m.set_row(0, BitVector(2)), std::invalid_argument);
  EXPECT_THROW(BitMatrix::from_strings({"10", "1"}), std::invalid_argument);
}

TEST(WordBasis, AgreesWithRank) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = rng() % 40;
    const std::size_t cols = 1 + rng() % 64;
    const auto m = random_matrix(rows, cols, rng);
    WordBasis basis;
    for (std::size_t r = 0; r < rows; ++r) {
      basis.insert(m.row_words(r)[0]);
    }
    EXPECT_EQ(basis.rank(), rank(m));
    const std::uint64_t probe = rng() & (cols == 64 ? ~0ULL : (1ULL << cols) - 1);
    BitVector pv(cols);
    for (std::size_t i = 0; i < cols; ++i) {
      pv.set(i, (probe >> i) & 1U);
    }
    EXPECT_EQ(basis.contains(probe), solve(m.transpose(), pv).has_value());
  }
}
