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

// Certified bounds on mu(A), the smallest operator norm of A over all
// absolute vector norms.
//
// mu(A) is the growth rate of the products A D1 A D2 ... A Dk over unimodular
// diagonals Di. Two finite-depth facts bracket it:
//
//   rho(A D1 ... A Dk)^(1/k)            <= mu(A)   for every word,
//   mu(A) <= max_words ||A D1 ... D(k-1) A||_2^(1/k)  for every k,
//
// the second by submultiplicativity of the level maxima. The trailing
// diagonal Dk never changes a 2-norm, so upper-bound searches enumerate one
// letter fewer than lower-bound searches. Both searches use the quotient
// alphabet (first phase fixed to 1): negating a letter negates the product.
//
// Over C the searched alphabet is the q-th roots of unity. Lower bounds stay
// valid (the grid is a subset of the group); upper bounds over the grid are
// heuristic unless they come from the rho(|A|) cap or n = 1.

#ifndef ABSNORM_MU_BOUNDS_HPP
#define ABSNORM_MU_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "absnorm/diagonal.hpp"
#include "absnorm/matrix.hpp"

namespace absnorm {

// Largest number of words a single search may visit at its deepest level.
inline constexpr double kMaxSearchNodes = 1e8;

// Complex semantics apply to complex matrices and to any grid order above 2.
bool uses_complex_semantics(const Matrix& a, int grid_q);

struct LowerBound {
  double value = 0.0;
  DiagonalWord witness;  // terminal word, rho(word_product)^(1/k) = value
  std::size_t nodes = 0;
};

// max over terminal words of length 1..max_depth of
// rho(A D1 ... A Dk)^(1/k). Ties keep the first word in lexicographic
// (depth-first, prefix-first) order.
LowerBound mu_lower_bound(const Matrix& a, std::size_t max_depth, int grid_q,
                          unsigned threads = 0);

struct UpperBound {
  double value = 0.0;
  // Valid bound obtained from each depth k = 1..max_depth; value is the min.
  std::vector<double> level_bounds;
  std::size_t nodes = 0;
  std::size_t pruned = 0;
  // Nodes with ||P||^(1/k) at or below this level were not expanded;
  // -1 when pruning is disabled (prune_delta == 0).
  double prune_threshold = -1.0;
};

// Branch-and-bound over diagonal words. A node P of depth k is closed when
// ||P||_2^(1/k) <= alpha + prune_delta, with alpha the lower bound over
// words of length <= 2. For every depth k the bound
//   max(closed node values at depth < k, all evaluated node values at k)
// dominates mu(A): every long product factors into closed or depth-k
// blocks. prune_delta = 0 disables pruning (exhaustive level maxima).
UpperBound mu_upper_bound(const Matrix& a, std::size_t max_depth, int grid_q,
                          double prune_delta, unsigned threads = 0);

// beta_k = max over words of ||A D1 A ... D(k-1) A||_2 for k = 1..max_depth,
// exhaustively.
std::vector<double> word_norm_maxima(const Matrix& a, std::size_t max_depth,
                                     int grid_q, unsigned threads = 0);

enum class Shortcut { none, sign_equivalent, nonnegative };

const char* to_string(Shortcut s) noexcept;

struct BoundsConfig {
  std::size_t max_depth = 6;
  int grid_q = 2;
  double prune_delta = 1e-3;
  double tol = 1e-9;
  bool use_shortcut = true;
  unsigned threads = 0;
};

struct BoundsReport {
  double lower = 0.0;
  double upper = 0.0;
  DiagonalWord lower_witness;
  std::size_t depth_explored = 0;
  std::size_t nodes_visited = 0;
  bool exact = false;
  Shortcut shortcut = Shortcut::none;
  std::optional<int> grid_q;  // set under complex semantics
  bool upper_certified = true;

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

// Runs the sign-equivalence test first; a witness gives
// lower = upper = rho(|A|). Otherwise combines both searches and caps the
// upper bound at rho(|A|).
BoundsReport mu_bounds(const Matrix& a, const BoundsConfig& config = {});

struct GrowthQuery {
  double eps = 0.0;
  std::size_t max_depth = 6;
  // Overrides the default level c = rho(A) + eps; eps is then unused.
  std::optional<double> level;
};

enum class GrowthVerdict { bounded, growing, inconclusive };

const char* to_string(GrowthVerdict v) noexcept;

struct GrowthReport {
  GrowthVerdict verdict = GrowthVerdict::inconclusive;
  double level = 0.0;
  // sequence[k-1] = c^-k * beta_k for k = 1..max_depth.
  std::vector<double> sequence;
  // ratios[k-1] = sequence[k] / sequence[k-1].
  std::vector<double> ratios;
  // Interval on mu(A) from the same words; certified decides the verdict
  // when lower > c (growing) or upper < c (bounded).
  double mu_lower = 0.0;
  double mu_upper = 0.0;
  bool certified = false;
};

// Finite-depth test of whether c^-k * max ||A D1 ... Dk x||_2 stays bounded.
// Without a certificate the verdict is heuristic: bounded when the sequence
// is non-increasing over the last max(3, m/4) depths and g_m <= g_1; growing
// when g_m > 10 g_1 with every ratio in that window above 1.
GrowthReport check_growth_condition(const Matrix& a, const GrowthQuery& query,
                                    int grid_q, unsigned threads = 0);

}  // namespace absnorm

#endif  // ABSNORM_MU_BOUNDS_HPP
