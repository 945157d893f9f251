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

// Truncated extremal absolute norm
//
//   N_m(x) = max_{0 <= k <= m} max_{D1..Dk} c^-k ||A D1 A ... D(k-1) A Dk x||_2
//
// where the k = 0 term is ||x||_2. For c above mu(A) the untruncated norm
// satisfies N(Ax) <= c N(x); every truncation is itself an absolute norm, a
// maximum of seminorms that includes the Euclidean norm, so the axiom checks
// below are exact statements at each depth rather than asymptotic ones.
//
// Under complex semantics the diagonals range over the q-th roots of unity,
// so evaluations bound the continuous-group norm from below and absoluteness
// holds for grid phases only.

#ifndef ABSNORM_EXTREMAL_NORM_HPP
#define ABSNORM_EXTREMAL_NORM_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "absnorm/diagonal.hpp"
#include "absnorm/matrix.hpp"

namespace absnorm {

struct ExtremalNormOptions {
  // Keep only the `beam_width` largest vectors per level; 0 disables. Beam
  // evaluations are lower bounds on the exact truncated norm.
  std::size_t beam_width = 0;
};

class TruncatedExtremalNorm {
 public:
  const Matrix& matrix() const noexcept { return a_; }
  double level() const noexcept { return c_; }
  std::size_t depth() const noexcept { return m_; }
  int grid_q() const noexcept { return grid_q_; }
  bool complex_semantics() const noexcept { return complex_; }
  std::size_t beam_width() const noexcept { return beam_width_; }
  bool lower_bound_only() const noexcept { return beam_width_ > 0; }

  // Set when c does not exceed the certified upper bound on mu(A) computed at
  // build time; the infinite construction then need not converge.
  bool level_warning() const noexcept { return level_warning_; }
  double certified_upper() const noexcept { return certified_upper_; }

  const std::vector<UnimodularDiagonal>& letters() const noexcept { return letters_; }

  // Same norm truncated at another depth.
  TruncatedExtremalNorm with_depth(std::size_t m) const;

 private:
  friend TruncatedExtremalNorm build_norm(const Matrix&, double, std::size_t, int,
                                          ExtremalNormOptions);
  TruncatedExtremalNorm() = default;

  Matrix a_;
  double c_ = 1.0;
  std::size_t m_ = 0;
  int grid_q_ = 2;
  bool complex_ = false;
  std::size_t beam_width_ = 0;
  bool level_warning_ = false;
  double certified_upper_ = 0.0;
  std::vector<UnimodularDiagonal> letters_;
};

// Throws InputError for c <= 0, CapacityError when the exact enumeration of
// depth m exceeds the search budget.
TruncatedExtremalNorm build_norm(const Matrix& a, double c, std::size_t m,
                                 int grid_q, ExtremalNormOptions options = {});

double eval_norm(const TruncatedExtremalNorm& norm, std::span<const Scalar> x);

struct ContractionReport {
  std::size_t trials = 0;
  // N_m(Ax) <= c N_{m+1}(x) (1 + 1e-12) on every trial.
  bool structural_holds = true;
  std::size_t structural_failures = 0;
  double max_structural_ratio = 0.0;  // N_m(Ax) / (c N_{m+1}(x))
  // sup over trials of N_m(Ax) / N_m(x), and the same at depth m - 1.
  double max_empirical_ratio = 0.0;
  double max_empirical_ratio_previous = 0.0;
};

ContractionReport contraction_check(const TruncatedExtremalNorm& norm,
                                    std::size_t trials, std::uint64_t seed);

struct AxiomCheck {
  std::size_t failures = 0;
  double worst = 0.0;  // largest relative violation seen (<= 0 when clean)
};

struct AxiomReport {
  std::size_t trials = 0;
  AxiomCheck positivity;
  AxiomCheck homogeneity;
  AxiomCheck triangle;
  AxiomCheck absoluteness;
  AxiomCheck monotonicity;

  bool passed() const noexcept {
    return positivity.failures + homogeneity.failures + triangle.failures +
               absoluteness.failures + monotonicity.failures ==
           0;
  }
};

inline constexpr double kAxiomSlack = 1e-12;

// Seeded checks of positivity, absolute homogeneity, the triangle
// inequality, invariance under (grid) unimodular diagonals and monotonicity
// (|x| <= |y| entrywise, with x a grid-phase rescaling of y under complex
// semantics), each within kAxiomSlack relative slack.
AxiomReport verify_norm_axioms(const TruncatedExtremalNorm& norm,
                               std::size_t trials, std::uint64_t seed);

// A real absolute norm: a weighted lp norm or a real-semantics extremal norm.
using AbsoluteNorm = std::variant<WeightedLpNorm, TruncatedExtremalNorm>;

double eval_absolute_norm(const AbsoluteNorm& norm, std::span<const Scalar> x);

struct GapReport {
  double real_sup = 0.0;
  double complex_sup = 0.0;
  double gap = 0.0;  // complex_sup - real_sup
};

// Samples sup ||Ax|| / ||x|| over real x and over complex x with the
// complexified norm ||x||_C = || |x| ||. Candidates: coordinate vectors,
// sign vectors (all of them for n <= 12, divided entrywise by the weights of
// a weighted lp norm), then `trials` random real and
// random complex vectors. Every real candidate is also a complex one, so
// gap >= 0 by construction. Purely experimental.
GapReport complexify_gap_search(const Matrix& a, const AbsoluteNorm& norm,
                                std::size_t trials, std::uint64_t seed);

}  // namespace absnorm

#endif  // ABSNORM_EXTREMAL_NORM_HPP
