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

#include "absnorm/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "absnorm/sign_equivalence.hpp"

namespace absnorm {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// delta shrinks by kDeltaStep per level. For a nilpotent block of size k the
// perturbed radius behaves like delta^(1/k), so plain halving stalls far
// above any useful tolerance.
constexpr int kMaxLevels = 60;
constexpr double kDeltaStep = 1e-4;
constexpr std::size_t kInnerIterations = 100;
constexpr std::size_t kMaxIterations = 20'000;

// Dense row-major real matrix of B^T + delta.
std::vector<double> shifted_transpose(const Matrix& b, double delta) {
  const std::size_t n = b.size();
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = b(j, i).real() + delta;
  }
  return m;
}

// Solves (t I - M) y = rhs by Gaussian elimination with partial pivoting.
std::optional<std::vector<double>> solve_shifted(const std::vector<double>& m,
                                                 std::size_t n, double t,
                                                 std::span<const double> rhs) {
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = -m[i];
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] += t;
  std::vector<double> y(rhs.begin(), rhs.end());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
    }
    if (a[piv * n + k] == 0.0) return std::nullopt;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      std::swap(y[k], y[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      y[i] -= f * y[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = y[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k * n + j] * y[j];
    y[k] = s / a[k * n + k];
  }
  for (double v : y) {
    if (!std::isfinite(v)) return std::nullopt;
  }
  return y;
}

// min/max of (M w)_i / w_i for a dense M and positive w.
Bracket ratio_bracket(const std::vector<double>& m, std::size_t n,
                      std::span<const double> w) {
  Bracket br{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += m[i * n + j] * w[j];
    const double r = s / w[i];
    br.lower = std::min(br.lower, r);
    br.upper = std::max(br.upper, r);
  }
  return br;
}

bool normalize_positive(std::vector<double>& w) {
  const double top = *std::max_element(w.begin(), w.end());
  if (!(top > 0.0) || !std::isfinite(top)) return false;
  for (double& v : w) {
    if (!(v > 0.0)) return false;
    v /= top;
  }
  return true;
}

// Shifted inverse iteration on M = B^T + delta towards its Perron vector.
// Returns false when an iterate loses positivity (possible only at
// delta = 0 for reducible B); `w` then keeps the last positive iterate.
bool perron_iterate(const std::vector<double>& m, std::size_t n,
                    std::vector<double>& w, std::size_t& iterations) {
  for (std::size_t it = 0; it < kInnerIterations; ++it) {
    const Bracket br = ratio_bracket(m, n, w);
    if (br.width() <= 4.0 * kEps * br.upper) return true;
    const double t = br.upper + std::max(1e-3 * br.width(), 4.0 * kEps * br.upper);
    auto y = solve_shifted(m, n, t, w);
    ++iterations;
    if (!y || !normalize_positive(*y)) return false;
    if (*y == w) return true;
    w = std::move(*y);
    if (iterations >= kMaxIterations) return false;
  }
  return true;
}

// Strongly connected components of the support graph (edge i -> j when
// b_ij > 0), listed so that every edge between components goes from an
// earlier component to a later one.
std::vector<std::vector<std::size_t>> components_in_topological_order(const Matrix& b) {
  const std::size_t n = b.size();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnseen), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;
  // Tarjan; n is small enough for recursion.
  auto visit = [&](auto&& self, std::size_t v) -> void {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (b(v, w).real() <= 0.0) continue;
      if (index[w] == kUnseen) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] != index[v]) return;
    auto& comp = out.emplace_back();
    std::size_t w;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack[w] = false;
      comp.push_back(w);
    } while (w != v);
    std::sort(comp.begin(), comp.end());
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == kUnseen) visit(visit, v);
  }
  // Tarjan emits sinks first.
  std::reverse(out.begin(), out.end());
  return out;
}

void check_nonnegative(const Matrix& b) {
  if (!is_nonnegative(b)) {
    throw InputError("Perron routines require an entrywise nonnegative real matrix");
  }
}

PerronResult from_components(const Matrix& b, double tol,
                             const std::vector<std::vector<std::size_t>>& comps);

}  // namespace

double collatz_wielandt_upper(const Matrix& b, std::span<const double> w) {
  const std::size_t n = b.size();
  if (w.size() != n) throw DimensionError("weight dimension mismatch");
  double upper = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += b(j, i).real() * w[j];
    upper = std::max(upper, s / w[i]);
  }
  return upper;
}

Bracket collatz_wielandt_bracket(const Matrix& b, std::span<const double> w) {
  const std::size_t n = b.size();
  if (w.size() != n) throw DimensionError("weight dimension mismatch");
  Bracket br;
  br.upper = collatz_wielandt_upper(b, w);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return w[x] > w[y]; });
  // Level set = the k heaviest coordinates.
  std::vector<bool> in_set(n, false);
  double lower = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    in_set[order[k]] = true;
    if (!(w[order[k]] > 0.0)) break;
    double set_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_set[i]) continue;
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (in_set[j]) s += b(j, i).real() * w[j];
      }
      set_min = std::min(set_min, s / w[i]);
    }
    lower = std::max(lower, set_min);
  }
  br.lower = lower;
  return br;
}

PerronResult nonneg_spectral_radius(const Matrix& b, double tol) {
  check_nonnegative(b);
  if (!(tol > 0.0)) throw InputError("Perron tolerance must be positive");
  const std::size_t n = b.size();

  PerronResult result;
  result.left_vector.assign(n, 1.0);
  const double scale = b.max_abs();
  if (n == 1 || scale == 0.0) {
    const double v = b(0, 0).real() * (n == 1 ? 1.0 : 0.0);
    result.rho = v;
    result.bracket = {v, v};
    return result;
  }

  std::vector<double> w(n, 1.0);
  Bracket best{0.0, std::numeric_limits<double>::infinity()};
  auto consider = [&](const std::vector<double>& candidate) {
    const Bracket br = collatz_wielandt_bracket(b, candidate);
    best.lower = std::max(best.lower, br.lower);
    if (br.upper < best.upper) {
      best.upper = br.upper;
      result.left_vector = candidate;
    }
  };
  consider(w);

  const auto exact = shifted_transpose(b, 0.0);
  double delta = 1e-2 * scale;
  for (int level = 0; level <= kMaxLevels; ++level, delta *= kDeltaStep) {
    if (best.width() <= tol) break;
    const auto m = shifted_transpose(b, delta);
    perron_iterate(m, n, w, result.iterations);
    consider(w);
    // Polish at delta = 0; converges directly for irreducible B.
    std::vector<double> polished = w;
    perron_iterate(exact, n, polished, result.iterations);
    consider(polished);
    if (result.iterations >= kMaxIterations) break;
  }

  best.lower = std::min(best.lower, best.upper);
  result.bracket = best;
  if (best.width() > tol) {
    // Reducible fallback: per-block radii, then weights that make the
    // coupling between blocks negligible.
    const auto comps = components_in_topological_order(b);
    if (comps.size() > 1) {
      PerronResult split = from_components(b, tol, comps);
      split.iterations += result.iterations;
      if (split.bracket.width() <= tol) return split;
      best.lower = std::max(best.lower, split.bracket.lower);
      if (split.bracket.upper < best.upper) best.upper = split.bracket.upper;
      best.lower = std::min(best.lower, best.upper);
    }
    throw PerronNonConvergence(result.iterations, best);
  }
  result.rho = 0.5 * (best.lower + best.upper);
  return result;
}

namespace {

PerronResult from_components(const Matrix& b, double tol,
                             const std::vector<std::vector<std::size_t>>& comps) {
  const std::size_t n = b.size();
  // Block brackets take half the budget, coupling at most a quarter.
  const double coupling = 0.25 * tol;
  PerronResult result;
  std::vector<double> w(n, 0.0);
  double lower = 0.0;
  for (const auto& comp : comps) {
    const std::size_t k = comp.size();
    std::vector<double> u(k, 1.0);
    if (k == 1) {
      lower = std::max(lower, b(comp[0], comp[0]).real());
    } else {
      Matrix block(k, Field::real);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) block.set(i, j, b(comp[i], comp[j]));
      const PerronResult r = nonneg_spectral_radius(block, 0.5 * tol);
      result.iterations += r.iterations;
      lower = std::max(lower, r.bracket.lower);
      u = r.left_vector;
    }
    // Inflow from earlier blocks, already weighted.
    double scale = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      double inflow = 0.0;
      for (std::size_t j = 0; j < n; ++j) inflow += b(j, comp[i]).real() * w[j];
      scale = std::max(scale, inflow / (coupling * u[i]));
    }
    for (std::size_t i = 0; i < k; ++i) w[comp[i]] = scale * u[i];
  }
  const double top = *std::max_element(w.begin(), w.end());
  for (double& v : w) v /= top;
  result.left_vector = w;
  if (std::any_of(w.begin(), w.end(), [](double v) { return !(v > 0.0); })) {
    result.bracket = {lower, std::numeric_limits<double>::infinity()};
    return result;
  }
  const Bracket cw = collatz_wielandt_bracket(b, w);
  result.bracket = {std::min(std::max(lower, cw.lower), cw.upper), cw.upper};
  result.rho = 0.5 * (result.bracket.lower + result.bracket.upper);
  return result;
}

}  // namespace

WeightedLpNorm optimal_weighted_l1(const Matrix& b, double eps) {
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  // upper - lower <= eps with lower <= rho certifies upper <= rho + eps.
  const PerronResult pr = nonneg_spectral_radius(b, eps);
  return WeightedLpNorm(pr.left_vector, NormExponent::one);
}

}  // namespace absnorm
