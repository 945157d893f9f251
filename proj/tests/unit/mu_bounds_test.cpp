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

#include <cmath>
#include <random>

#include "absnorm/error.hpp"
#include "absnorm/mu_bounds.hpp"
#include "absnorm/perron.hpp"
#include "oracle.hpp"

namespace absnorm {
namespace {

const Matrix kRankOne = Matrix::real({{1, 1}, {-1, -1}});
const Matrix kHadamard = Matrix::real({{1, 1}, {1, -1}});

std::vector<testing::CVec> grid_alphabet(std::size_t n, int q) {
  std::vector<testing::CVec> out;
  for (const auto& d : enumerate_phase_diagonals(n, q, true)) {
    testing::CVec v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = d[i];
    out.push_back(v);
  }
  return out;
}

double abs_radius(const Matrix& a) { return testing::oracle_radius(entrywise_abs(a)); }

TEST(MuLower, Fixtures) {
  const auto r = mu_lower_bound(kRankOne, 1, 2);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  ASSERT_EQ(r.witness.length(), 1u);
  EXPECT_EQ(r.witness.letters[0], UnimodularDiagonal::signs({1, -1}));

  const Matrix b = Matrix::real({{2, 1}, {1, 3}});
  const auto rb = mu_lower_bound(b, 3, 2);
  EXPECT_NEAR(rb.value, testing::oracle_radius(b), 1e-12);
  EXPECT_EQ(rb.witness.letters, std::vector<UnimodularDiagonal>{UnimodularDiagonal::identity(2)});

  const auto rh = mu_lower_bound(kHadamard, 4, 2);
  EXPECT_NEAR(rh.value, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(rh.witness.letters, std::vector<UnimodularDiagonal>{UnimodularDiagonal::identity(2)});
}

TEST(MuLower, TiesKeepTheFirstWord) {
  const auto r = mu_lower_bound(Matrix::identity(3), 3, 2);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_EQ(r.witness.letters, std::vector<UnimodularDiagonal>{UnimodularDiagonal::identity(3)});
}

TEST(MuLower, WitnessReproducesValue) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = testing::random_real(3, rng);
    const auto r = mu_lower_bound(a, 4, 2);
    const double k = static_cast<double>(r.witness.length());
    EXPECT_NEAR(std::pow(testing::oracle_radius(word_product(a, r.witness, true)), 1.0 / k), r.value, 1e-9);
  }
}

TEST(MuLower, MatchesBruteForceOverFullAlphabet) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t) % 2;
    const Matrix a = testing::random_real(n, rng);
    const double expected = testing::oracle_lower(a, 4, testing::sign_vectors(n, false));
    EXPECT_NEAR(mu_lower_bound(a, 4, 2, 1).value, expected, 1e-9) << "trial " << t;
  }
}

TEST(MuLower, ComplexGridMatchesBruteForce) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = testing::random_complex(2, rng);
    const double expected = testing::oracle_lower(a, 3, grid_alphabet(2, 4));
    EXPECT_NEAR(mu_lower_bound(a, 3, 4, 1).value, expected, 1e-9);
  }
}

TEST(MuUpper, Fixtures) {
  EXPECT_NEAR(mu_upper_bound(kRankOne, 1, 2, 1e-3).value, 2.0, 1e-12);
  EXPECT_NEAR(mu_upper_bound(kHadamard, 1, 2, 1e-3).value, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(mu_upper_bound(kHadamard, 6, 2, 0.0).value, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(mu_upper_bound(Matrix::zeros(3), 4, 2, 1e-3).value, 0.0);
  EXPECT_THROW(mu_upper_bound(kRankOne, 2, 2, -1.0), InputError);
}

TEST(MuUpper, WordNormMaximaMatchOracle) {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t) % 2;
    const Matrix a = t % 3 == 2 ? testing::random_complex(n, rng) : testing::random_real(n, rng);
    const int q = t % 3 == 2 ? 4 : 2;
    const auto ours = word_norm_maxima(a, 5, q, 1);
    const auto expected = testing::oracle_beta(a, 5, q == 2 ? testing::sign_vectors(n, true) : grid_alphabet(n, q));
    ASSERT_EQ(ours.size(), expected.size());
    for (std::size_t k = 0; k < ours.size(); ++k) EXPECT_NEAR(ours[k], expected[k], 1e-12 * expected[k]);
  }
}

// Exhaustive levels over the quotient alphabet agree with the full alphabet.
TEST(MuUpper, QuotientMatchesFullEnumeration) {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 3;
    const Matrix a = testing::random_real(n, rng);
    const auto full = testing::oracle_beta(a, 5, testing::sign_vectors(n, false));
    const auto ours = mu_upper_bound(a, 5, 2, 0.0, 1);
    for (std::size_t k = 0; k < 5; ++k) {
      EXPECT_NEAR(ours.level_bounds[k], std::pow(full[k], 1.0 / static_cast<double>(k + 1)), 1e-12);
    }
  }
}

// With pruning, every level bound is at most max(threshold, exhaustive level
// bound), and it still dominates the lower bound.
TEST(MuUpper, PruningIsSound) {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t) % 2;
    const Matrix a = testing::random_real(n, rng);
    const auto exhaustive = mu_upper_bound(a, 7, 2, 0.0, 1);
    for (double delta : {1e-3, 1e-1, 0.5}) {
      const auto pruned = mu_upper_bound(a, 7, 2, delta, 1);
      EXPECT_GE(pruned.prune_threshold, 0.0);
      for (std::size_t k = 0; k < 7; ++k) {
        EXPECT_LE(pruned.level_bounds[k],
                  std::max(pruned.prune_threshold, exhaustive.level_bounds[k]) + 1e-12);
      }
      EXPECT_GE(pruned.value, mu_lower_bound(a, 7, 2, 1).value - 1e-12);
      EXPECT_LE(pruned.nodes, exhaustive.nodes + 100);
    }
  }
}

TEST(MuBounds, Fixtures) {
  const auto r = mu_bounds(kRankOne);
  EXPECT_NEAR(r.lower, 2.0, 1e-12);
  EXPECT_NEAR(r.upper, 2.0, 1e-12);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.shortcut, Shortcut::sign_equivalent);
  EXPECT_FALSE(r.grid_q.has_value());

  const auto h = mu_bounds(kHadamard);
  EXPECT_NEAR(h.lower, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(h.upper, std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(h.exact);
  EXPECT_EQ(h.shortcut, Shortcut::none);
  EXPECT_LT(h.upper, abs_radius(kHadamard) - 0.5);

  const auto id = mu_bounds(Matrix::identity(4));
  EXPECT_DOUBLE_EQ(id.lower, 1.0);
  EXPECT_DOUBLE_EQ(id.upper, 1.0);
}

TEST(MuBounds, NonnegativeUsesShortcut) {
  std::mt19937_64 rng(57);
  for (int t = 0; t < 30; ++t) {
    const Matrix b = testing::random_nonnegative(1 + static_cast<std::size_t>(t) % 6, rng, 0.2);
    const auto r = mu_bounds(b);
    EXPECT_EQ(r.shortcut, Shortcut::nonnegative);
    EXPECT_TRUE(r.exact);
    EXPECT_NEAR(r.lower, testing::oracle_radius(b), 1e-8);
  }
}

TEST(MuBounds, SandwichOnRandomRealMatrices) {
  std::mt19937_64 rng(58);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 4;
    const Matrix a = testing::random_real(n, rng);
    BoundsConfig cfg;
    cfg.max_depth = 5;
    const auto r = mu_bounds(a, cfg);
    EXPECT_LE(r.lower, r.upper + 1e-12);
    EXPECT_GE(r.lower, testing::oracle_radius(a) - 1e-9);
    EXPECT_LE(r.upper, abs_radius(a) + 1e-9);
  }
}

TEST(MuBounds, MonotoneInDepth) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = testing::random_real(2 + static_cast<std::size_t>(t) % 2, rng);
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    for (std::size_t depth = 1; depth <= 8; ++depth) {
      BoundsConfig cfg;
      cfg.max_depth = depth;
      cfg.use_shortcut = false;
      const auto r = mu_bounds(a, cfg);
      EXPECT_GE(r.lower, lower);
      EXPECT_LE(r.upper, upper);
      lower = r.lower;
      upper = r.upper;
    }
  }
}

TEST(MuBounds, IndependentOfThreadCount) {
  std::mt19937_64 rng(60);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = t % 2 ? testing::random_complex(3, rng) : testing::random_real(4, rng);
    BoundsConfig cfg;
    cfg.max_depth = 5;
    cfg.grid_q = t % 2 ? 4 : 2;
    cfg.threads = 1;
    const auto one = mu_bounds(a, cfg);
    cfg.threads = 8;
    EXPECT_EQ(mu_bounds(a, cfg), one);
  }
}

TEST(MuBounds, ComplexSemanticsAreFlagged) {
  std::mt19937_64 rng(61);
  const Matrix a = testing::random_real(3, rng);
  BoundsConfig cfg;
  cfg.grid_q = 4;
  cfg.max_depth = 3;
  const auto r = mu_bounds(a, cfg);
  ASSERT_TRUE(r.grid_q.has_value());
  EXPECT_EQ(*r.grid_q, 4);
  EXPECT_LE(r.upper, abs_radius(a) + 1e-9);
  // The grid contains the signs, so the complex lower bound is at least the real one.
  cfg.grid_q = 2;
  EXPECT_GE(r.lower, mu_bounds(a, cfg).lower - 1e-12);

  const auto one = mu_bounds(Matrix::complex({{{3, 4}}}));
  EXPECT_TRUE(one.upper_certified);
  EXPECT_NEAR(one.lower, 5.0, 1e-12);
  EXPECT_NEAR(one.upper, 5.0, 1e-12);
}

TEST(MuBounds, CapacityAndDepthErrors) {
  BoundsConfig cfg;
  cfg.use_shortcut = false;
  cfg.max_depth = 2;
  BoundsConfig zero;
  zero.max_depth = 0;
  zero.use_shortcut = false;
  EXPECT_THROW(mu_bounds(kHadamard, zero), InputError);
  std::mt19937_64 rng(62);
  EXPECT_THROW(mu_bounds(testing::random_real(20, rng), cfg), CapacityError);
  cfg.max_depth = 30;
  EXPECT_THROW(mu_bounds(testing::random_real(3, rng), cfg), CapacityError);
}

// max over D_k and unit x of ||P D_k x||_2 equals ||P||_2.
TEST(MuBounds, TrailingDiagonalDoesNotChangeTheNorm) {
  std::mt19937_64 rng(63);
  std::normal_distribution<double> g;
  for (int t = 0; t < 50; ++t) {
    const Matrix a = testing::random_real(3, rng);
    DiagonalWord w;
    for (int k = 0; k < 3; ++k) w.letters.push_back(testing::random_unimodular(3, false, rng));
    const Matrix p = word_product(a, w, false);
    const double np = spectral_norm(p);
    for (const auto& d : enumerate_sign_diagonals(3, false)) {
      EXPECT_NEAR(spectral_norm(scale_columns(p, d.phases())), np, 1e-12 * np);
      for (int s = 0; s < 10; ++s) {
        Vector x{g(rng), g(rng), g(rng)};
        const Matrix pd = scale_columns(p, d.phases());
        const Vector y = pd * x;
        double ny = 0, nx = 0;
        for (std::size_t i = 0; i < 3; ++i) ny += std::norm(y[i]), nx += std::norm(x[i]);
        EXPECT_LE(std::sqrt(ny / nx), np * (1 + 1e-12));
      }
    }
  }
}

TEST(Growth, RankOneFixtureGrowsWithRatioFour) {
  GrowthQuery q;
  q.eps = 0.5;
  const auto r = check_growth_condition(kRankOne, q, 2);
  EXPECT_DOUBLE_EQ(r.level, 0.5);
  EXPECT_EQ(r.verdict, GrowthVerdict::growing);
  EXPECT_TRUE(r.certified);
  ASSERT_EQ(r.sequence.size(), 6u);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(r.sequence[k], std::pow(4.0, static_cast<double>(k + 1)), 1e-9);
  for (double x : r.ratios) EXPECT_NEAR(x, 4.0, 1e-6);
}

TEST(Growth, BoundedAboveMu) {
  GrowthQuery q;
  q.level = 2.5;
  const auto r = check_growth_condition(kRankOne, q, 2);
  EXPECT_EQ(r.verdict, GrowthVerdict::bounded);
  EXPECT_TRUE(r.certified);

  GrowthQuery e;
  e.eps = 0.1;
  EXPECT_EQ(check_growth_condition(Matrix::identity(3), e, 2).verdict, GrowthVerdict::bounded);
  std::mt19937_64 rng(64);
  for (int t = 0; t < 10; ++t) {
    const Matrix b = testing::random_nonnegative(3, rng);
    EXPECT_EQ(check_growth_condition(b, e, 2).verdict, GrowthVerdict::bounded);
  }
}

TEST(Growth, LevelAtMuIsNotCertified) {
  GrowthQuery q;
  q.level = 2.0;
  const auto r = check_growth_condition(kRankOne, q, 2);
  EXPECT_FALSE(r.certified);
  EXPECT_EQ(r.verdict, GrowthVerdict::bounded);
  for (double g : r.sequence) EXPECT_NEAR(g, 1.0, 1e-12);
}

TEST(Growth, RejectsBadQueries) {
  EXPECT_THROW(check_growth_condition(kRankOne, GrowthQuery{}, 2), InputError);
  GrowthQuery q;
  q.level = -1.0;
  EXPECT_THROW(check_growth_condition(kRankOne, q, 2), InputError);
  q.level = 1.0;
  q.max_depth = 0;
  EXPECT_THROW(check_growth_condition(kRankOne, q, 2), InputError);
}

}  // namespace
}  // namespace absnorm
