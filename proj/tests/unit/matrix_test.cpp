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
#include "absnorm/matrix.hpp"
#include "oracle.hpp"

namespace absnorm {
namespace {

using testing::oracle_norm2;
using testing::oracle_radius;

TEST(Matrix, RejectsEmptyAndNonSquare) {
  EXPECT_THROW(Matrix(0, Field::real), DimensionError);
  EXPECT_THROW(Matrix::from_rows({{1.0, 2.0}, {3.0}}, Field::real), DimensionError);
  EXPECT_THROW(Matrix::from_rows({{1.0, 2.0}}, Field::real), DimensionError);
  EXPECT_THROW(Matrix::from_rows({}, Field::real), DimensionError);
}

TEST(Matrix, RealFieldKeepsImaginaryPartsZero) {
  Matrix a(2, Field::real);
  EXPECT_THROW(a.set(0, 0, {1.0, 1e-300}), InputError);
  EXPECT_THROW(a.set(0, 0, std::nan("")), InputError);
  a.set(0, 1, -3.0);
  EXPECT_EQ(a(0, 1), Scalar(-3.0));
  Matrix z(2, Field::complex);
  z.set(1, 0, {0.0, 2.0});
  EXPECT_EQ(z(1, 0), Scalar(0.0, 2.0));
}

TEST(Matrix, ProductsPromoteField) {
  const Matrix a = Matrix::real({{1, 2}, {3, 4}});
  const Matrix z = Matrix::complex({{{0, 1}, 0}, {0, 1}});
  const Matrix az = a * z;
  EXPECT_EQ(az.field(), Field::complex);
  EXPECT_EQ(az(0, 0), Scalar(0, 1));
  EXPECT_EQ(az(1, 0), Scalar(0, 3));
  EXPECT_EQ((a * a).field(), Field::real);
  EXPECT_EQ(a * a, Matrix::real({{7, 10}, {15, 22}}));
  EXPECT_EQ(power(a, 3), a * a * a);
  EXPECT_EQ(power(a, 0), Matrix::identity(2));
}

TEST(Matrix, ScalingByDiagonals) {
  const Matrix a = Matrix::real({{1, 2}, {3, 4}});
  const Vector d{1.0, -1.0};
  EXPECT_EQ(scale_columns(a, d), Matrix::real({{1, -2}, {3, -4}}));
  EXPECT_EQ(scale_rows(d, a), Matrix::real({{1, 2}, {-3, -4}}));
  const Vector phase{Scalar(0, 1), 1.0};
  EXPECT_EQ(scale_columns(a, phase).field(), Field::complex);
}

TEST(Matrix, EntrywiseAbsIsReal) {
  const Matrix z = Matrix::complex({{{3, 4}, -1}, {0, {0, -2}}});
  EXPECT_EQ(entrywise_abs(z), Matrix::real({{5, 1}, {0, 2}}));
}

TEST(Eigensolver, SmallFixtures) {
  EXPECT_NEAR(spectral_radius(Matrix::real({{1, 1}, {-1, -1}})), 0.0, 1e-9);
  EXPECT_NEAR(spectral_radius(Matrix::real({{1, 1}, {1, 1}})), 2.0, 1e-12);
  EXPECT_NEAR(spectral_radius(Matrix::real({{1, 1}, {1, -1}})), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(spectral_radius(Matrix::real({{0, -1}, {1, 0}})), 1.0, 1e-12);
  EXPECT_NEAR(spectral_radius(Matrix::real({{-7}})), 7.0, 0.0);
  EXPECT_NEAR(spectral_norm(Matrix::real({{1, 1}, {-1, -1}})), 2.0, 1e-12);
  EXPECT_NEAR(spectral_norm(Matrix::complex({{{0, -2}}})), 2.0, 0.0);
}

TEST(Eigensolver, DefectiveAndNilpotent) {
  // Jordan block with eigenvalue 2: the computed eigenvalues split by O(eps^(1/n)).
  Matrix j(4, Field::real);
  for (std::size_t i = 0; i < 4; ++i) {
    j.set(i, i, 2.0);
    if (i + 1 < 4) j.set(i, i + 1, 1.0);
  }
  EXPECT_NEAR(spectral_radius(j), 2.0, 1e-3);
  Matrix shift(5, Field::real);
  for (std::size_t i = 0; i + 1 < 5; ++i) shift.set(i, i + 1, 1.0);
  EXPECT_NEAR(spectral_radius(shift), 0.0, 1e-12);
  EXPECT_NEAR(spectral_norm(shift), 1.0, 1e-12);
}

TEST(Eigensolver, AgreesWithOracleOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 9;
    const Matrix a = t % 2 ? testing::random_complex(n, rng) : testing::random_real(n, rng);
    const double rho = oracle_radius(a);
    EXPECT_NEAR(spectral_radius(a), rho, 1e-9 * std::max(1.0, rho)) << "trial " << t;
    const double s = oracle_norm2(a);
    EXPECT_NEAR(spectral_norm(a), s, 1e-12 * std::max(1.0, s)) << "trial " << t;
  }
}

TEST(Eigensolver, EigenvalueMultisetMatchesOracle) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = testing::random_complex(6, rng);
    auto ours = eigenvalues(a);
    Eigen::ComplexEigenSolver<testing::CMat> es(testing::to_eigen(a), false);
    // Greedy matching; eigenvalues of a random matrix are well separated.
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const Scalar target = es.eigenvalues()(i);
      auto it = std::min_element(ours.begin(), ours.end(), [&](Scalar x, Scalar y) {
        return std::abs(x - target) < std::abs(y - target);
      });
      ASSERT_NE(it, ours.end());
      EXPECT_NEAR(std::abs(*it - target), 0.0, 1e-9);
      ours.erase(it);
    }
  }
}

TEST(Eigensolver, RankDeficientProductsConverge) {
  // Long products of a rank-one matrix have singular values spanning many decades.
  const Matrix a = Matrix::real({{1, 1, 0}, {-1, -1, 1e-8}, {0, 2, 0}});
  Matrix p = a;
  for (int k = 0; k < 20; ++k) {
    p = p * a;
    EXPECT_NEAR(spectral_norm(p), oracle_norm2(p), 1e-12 * oracle_norm2(p));
  }
}

TEST(Norms, VectorNormsOnFixture) {
  const Vector x{Scalar(3, 4), -12.0};
  EXPECT_DOUBLE_EQ(vector_norm(x, WeightedLpNorm::unit(2, NormExponent::one)), 17.0);
  EXPECT_DOUBLE_EQ(vector_norm(x, WeightedLpNorm::unit(2, NormExponent::two)), 13.0);
  EXPECT_DOUBLE_EQ(vector_norm(x, WeightedLpNorm::unit(2, NormExponent::inf)), 12.0);
  EXPECT_DOUBLE_EQ(vector_norm(x, WeightedLpNorm({2.0, 0.5}, NormExponent::one)), 16.0);
  EXPECT_THROW(WeightedLpNorm({1.0, 0.0}, NormExponent::one), InputError);
  EXPECT_THROW(vector_norm(x, WeightedLpNorm::unit(3, NormExponent::one)), DimensionError);
}

TEST(Norms, OneByOneReducesToModulus) {
  const Matrix a = Matrix::complex({{{-3, 4}}});
  for (auto p : {NormExponent::one, NormExponent::two, NormExponent::inf}) {
    EXPECT_DOUBLE_EQ(induced_norm(a, WeightedLpNorm({7.0}, p)), 5.0);
  }
  EXPECT_DOUBLE_EQ(spectral_radius(a), 5.0);
}

// Induced norms are maxima of ||Ax|| / ||x||, so sampled ratios never exceed
// them, and the extreme points of the unit ball attain them for p = 1, inf.
TEST(Norms, InducedNormsDominateSampledRatios) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> logw(-1.5, 1.5);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 5;
    const bool complex = t % 2;
    const Matrix a = complex ? testing::random_complex(n, rng) : testing::random_real(n, rng);
    std::vector<double> w(n);
    for (auto& wi : w) wi = std::exp(logw(rng));
    for (auto p : {NormExponent::one, NormExponent::two, NormExponent::inf}) {
      const WeightedLpNorm norm(w, p);
      const double nu = induced_norm(a, norm);
      double best = 0.0;
      for (int s = 0; s < 50; ++s) {
        Vector x(n);
        for (auto& v : x) v = Scalar(g(rng), complex ? g(rng) : 0.0);
        const double r = vector_norm(a * x, norm) / vector_norm(x, norm);
        EXPECT_LE(r, nu * (1 + 1e-12));
        best = std::max(best, r);
      }
      if (p == NormExponent::one) {
        for (std::size_t j = 0; j < n; ++j) {
          Vector e(n, 0.0);
          e[j] = 1.0;
          best = std::max(best, vector_norm(a * e, norm) / vector_norm(e, norm));
        }
        EXPECT_NEAR(best, nu, 1e-12 * nu);
      }
    }
  }
}

TEST(Norms, SpectralRadiusBoundedByEveryInducedNorm) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> logw(-2, 2);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 6;
    const Matrix a = t % 2 ? testing::random_complex(n, rng) : testing::random_real(n, rng);
    std::vector<double> w(n);
    for (auto& wi : w) wi = std::exp(logw(rng));
    for (auto p : {NormExponent::one, NormExponent::two, NormExponent::inf}) {
      EXPECT_LE(spectral_radius(a), induced_norm(a, WeightedLpNorm(w, p)) + 1e-9);
    }
  }
}

TEST(Norms, UnitLpNormsInvariantUnderUnimodularScaling) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 6;
    const bool complex = t % 2;
    const Matrix a = complex ? testing::random_complex(n, rng) : testing::random_real(n, rng);
    const auto d1 = testing::random_unimodular(n, complex, rng);
    const auto d2 = testing::random_unimodular(n, complex, rng);
    const Matrix b = testing::sandwich(d1, a, d2);
    for (auto p : {NormExponent::one, NormExponent::two, NormExponent::inf}) {
      const auto unit = WeightedLpNorm::unit(n, p);
      EXPECT_NEAR(induced_norm(b, unit), induced_norm(a, unit), 1e-12 * std::max(1.0, induced_norm(a, unit)));
    }
  }
}

TEST(Norms, InducedTwoNormIsSpectralNormOfScaledMatrix) {
  const Matrix a = Matrix::real({{1, 2}, {0, 1}});
  const WeightedLpNorm w({1.0, 4.0}, NormExponent::two);
  // W A W^-1 = [[1, 0.5], [0, 1]]
  EXPECT_NEAR(induced_norm(a, w), oracle_norm2(Matrix::real({{1, 0.5}, {0, 1}})), 1e-14);
}

}  // namespace
}  // namespace absnorm
