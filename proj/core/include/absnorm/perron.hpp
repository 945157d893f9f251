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

#ifndef ABSNORM_PERRON_HPP
#define ABSNORM_PERRON_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "absnorm/error.hpp"
#include "absnorm/matrix.hpp"

namespace absnorm {

// Two-sided enclosure lower <= rho(B) <= upper.
struct Bracket {
  double lower = 0.0;
  double upper = 0.0;

  double width() const noexcept { return upper - lower; }
};

struct PerronResult {
  double rho = 0.0;
  // Positive weight w (max entry 1) with max_i (B^T w)_i / w_i = bracket.upper.
  std::vector<double> left_vector;
  std::size_t iterations = 0;
  Bracket bracket;
};

class PerronNonConvergence : public NonConvergenceError {
 public:
  PerronNonConvergence(std::size_t iterations, Bracket last)
      : NonConvergenceError("Perron bracket did not reach tolerance (last [" +
                                std::to_string(last.lower) + ", " +
                                std::to_string(last.upper) + "])",
                            iterations),
        bracket_(last) {}

  const Bracket& bracket() const noexcept { return bracket_; }

 private:
  Bracket bracket_;
};

// Collatz-Wielandt enclosure of rho(B) for nonnegative B at a weight w.
//
// upper = max_i (B^T w)_i / w_i, valid when w > 0.
// lower = max over level sets S = {i : w_i >= t} of min_{i in S}
//         (B^T w_S)_i / w_i, valid for any w >= 0, w != 0. Restricting to a
//         level set keeps the bound informative for reducible B.
Bracket collatz_wielandt_bracket(const Matrix& b, std::span<const double> w);

// max_i (B^T w)_i / w_i, the weighted l1 operator norm of nonnegative B.
double collatz_wielandt_upper(const Matrix& b, std::span<const double> w);

// Spectral radius of an entrywise nonnegative real matrix, certified by a
// Collatz-Wielandt bracket of width <= tol. Perron vectors come from shifted
// inverse iteration on (B + delta * ones)^T, with delta starting at
// 1e-2 * max_ij b_ij and shrinking by 1e-4 for at most 60 levels; each level
// is polished at delta = 0.
//
// Throws InputError for negative or complex input, PerronNonConvergence when
// the bracket stays wider than tol.
PerronResult nonneg_spectral_radius(const Matrix& b, double tol);

// Positive weights w with max_i (B^T w)_i / w_i <= rho(B) + eps, i.e. a
// weighted l1 norm whose induced norm of B is within eps of rho(B).
WeightedLpNorm optimal_weighted_l1(const Matrix& b, double eps);

}  // namespace absnorm

#endif  // ABSNORM_PERRON_HPP
