// Copyright 2026 The absnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "absnorm/diagonal.hpp"
#include "absnorm/error.hpp"
#include "oracle.hpp"

namespace absnorm {
namespace {

TEST(Diagonal, ValidatesModulus) {
  EXPECT_THROW(UnimodularDiagonal(Vector{1.0, 0.5}), InputError);
  EXPECT_NO_THROW(UnimodularDiagonal(Vector{std::polar(1.0, 0.3)}));
  const auto d = UnimodularDiagonal::signs({1, -1});
  EXPECT_TRUE(d.is_real());
  EXPECT_EQ(d.negated(), UnimodularDiagonal::signs({-1, 1}));
  EXPECT_EQ(d * d, UnimodularDiagonal::identity(2));
}

TEST(Diagonal, SignEnumerationFixtures) {
  const auto one = enumerate_sign_diagonals(1, true);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], UnimodularDiagonal::signs({1}));
  const auto two = enumerate_sign_diagonals(2, true);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], UnimodularDiagonal::signs({1, 1}));
  EXPECT_EQ(two[1], UnimodularDiagonal::signs({1, -1}));
  const auto full = enumerate_sign_diagonals(3, false);
  ASSERT_EQ(full.size(), 8u);
  EXPECT_EQ(full.front(), UnimodularDiagonal::signs({1, 1, 1}));
  EXPECT_EQ(full[1], UnimodularDiagonal::signs({1, 1, -1}));
  EXPECT_EQ(full.back(), UnimodularDiagonal::signs({-1, -1, -1}));
  EXPECT_THROW(enumerate_sign_diagonals(21, true), CapacityError);
}

TEST(Diagonal, PhaseEnumerationFixtures) {
  EXPECT_EQ(enumerate_phase_diagonals(2, 2, true), enumerate_sign_diagonals(2, true));
  const auto q4 = enumerate_phase_diagonals(2, 4, true);
  ASSERT_EQ(q4.size(), 4u);
  const Scalar expected[] = {1.0, Scalar(0, 1), -1.0, Scalar(0, -1)};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(q4[k][0], Scalar(1.0));
    EXPECT_EQ(q4[k][1], expected[k]);
  }
  EXPECT_EQ(enumerate_phase_diagonals(1, 6, true).size(), 1u);
  EXPECT_THROW(enumerate_phase_diagonals(2, 3, true), InputError);
  EXPECT_THROW(enumerate_phase_diagonals(8, 8, true), CapacityError);
}

// Quotient halves (1/q) the alphabet and never keeps both D and -D.
TEST(Diagonal, QuotientProperties) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int q : {2, 4, 6}) {
      const auto full = enumerate_phase_diagonals(n, q, false);
      const auto quot = enumerate_phase_diagonals(n, q, true);
      EXPECT_EQ(full.size(), quot.size() * static_cast<std::size_t>(q));
      for (std::size_t i = 0; i < quot.size(); ++i)
        for (std::size_t j = 0; j < quot.size(); ++j) EXPECT_FALSE(quot[i] == quot[j].negated());
    }
  }
}

TEST(Diagonal, RootsOfUnity) {
  EXPECT_EQ(root_of_unity(1, 4), Scalar(0, 1));
  EXPECT_EQ(root_of_unity(3, 4), Scalar(0, -1));
  EXPECT_EQ(root_of_unity(-1, 4), Scalar(0, -1));
  EXPECT_EQ(root_of_unity(4, 8), Scalar(-1, 0));
  EXPECT_NEAR(std::abs(root_of_unity(1, 6) - std::polar(1.0, M_PI / 3)), 0.0, 1e-15);
  EXPECT_EQ(phase_index(Scalar(0, -1), 4), 3);
  EXPECT_EQ(phase_index(std::polar(1.0, M_PI / 3), 6), 1);
  EXPECT_FALSE(phase_index(std::polar(1.0, 0.1), 4).has_value());
}

TEST(Diagonal, WordProductFixtures) {
  const Matrix a = Matrix::real({{1, 2}, {3, 4}});
  EXPECT_EQ(word_product(a, {}, false), a);
  EXPECT_EQ(word_product(a, {}, true), Matrix::identity(2));
  const auto d = UnimodularDiagonal::signs({1, -1});
  EXPECT_EQ(word_product(a, {{d}}, true), a * d.to_matrix());
  EXPECT_EQ(word_product(a, {{d}}, false), a * d.to_matrix() * a);
  std::mt19937_64 rng(21);
  DiagonalWord w;
  Matrix expected = Matrix::identity(3);
  for (int k = 0; k < 4; ++k) {
    w.letters.push_back(testing::random_unimodular(3, true, rng));
    expected = expected * w.letters.back().to_matrix();
  }
  const Matrix got = word_product(Matrix::identity(3), w, true);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(got(i, j) - expected(i, j)), 0.0, 1e-15);
}

TEST(Diagonal, NormInvariantUnderNegatingALetter) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const Matrix a = testing::random_real(3, rng);
    DiagonalWord w;
    for (int k = 0; k < 4; ++k) w.letters.push_back(testing::random_unimodular(3, false, rng));
    const double base = spectral_norm(word_product(a, w, false));
    DiagonalWord flipped = w;
    flipped.letters[static_cast<std::size_t>(t) % 4] = flipped.letters[static_cast<std::size_t>(t) % 4].negated();
    EXPECT_NEAR(spectral_norm(word_product(a, flipped, false)), base, 1e-12 * base);
  }
}

TEST(Diagonal, WordProductSplitsAtAnyPoint) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = testing::random_complex(3, rng);
    DiagonalWord u, v;
    for (int k = 0; k < 1 + t % 3; ++k) u.letters.push_back(testing::random_unimodular(3, true, rng));
    for (int k = 0; k < 1 + t % 4; ++k) v.letters.push_back(testing::random_unimodular(3, true, rng));
    DiagonalWord uv = u;
    uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
    const Matrix lhs = word_product(a, uv, true);
    const Matrix rhs = word_product(a, u, true) * word_product(a, v, true);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(lhs(i, j) - rhs(i, j)), 0.0, 1e-11);
  }
}

}  // namespace
}  // namespace absnorm
