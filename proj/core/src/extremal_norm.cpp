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

#include "absnorm/extremal_norm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "absnorm/error.hpp"
#include "absnorm/mu_bounds.hpp"
#include "absnorm/perron.hpp"

namespace absnorm {
namespace {

double euclidean(std::span<const Scalar> x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

void check_capacity(double letters, std::size_t m) {
  if (std::pow(letters, static_cast<double>(m)) > kMaxSearchNodes) {
    throw CapacityError("extremal norm enumeration exceeds the node budget; "
                        "lower the depth or enable a beam");
  }
}

// Upper bound on mu(A) that is certified for the norm's semantics.
double certified_mu_upper(const Matrix& a, std::size_t m, int grid_q) {
  double cap;
  try {
    cap = nonneg_spectral_radius(entrywise_abs(a), 1e-9).bracket.upper;
  } catch (const PerronNonConvergence& e) {
    cap = e.bracket().upper;
  }
  BoundsConfig config;
  config.max_depth = std::clamp<std::size_t>(m, 1, 3);
  config.grid_q = grid_q;
  config.prune_delta = 0.0;
  config.threads = 1;
  try {
    const BoundsReport r = mu_bounds(a, config);
    if (r.upper_certified) return std::min(cap, r.upper);
  } catch (const CapacityError&) {
  }
  return cap;
}

// y <- A (D y) / c
void step(const Matrix& a, const UnimodularDiagonal& d, double inv_c,
          std::span<const Scalar> y, Vector& out) {
  const std::size_t n = a.size();
  out.assign(n, Scalar(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    Scalar s(0.0);
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * (d[j] * y[j]);
    out[i] = s * inv_c;
  }
}

class DepthFirstEval {
 public:
  DepthFirstEval(const TruncatedExtremalNorm& norm)
      : norm_(norm), inv_c_(1.0 / norm.level()), levels_(norm.depth() + 1) {}

  double run(std::span<const Scalar> x) {
    best_ = euclidean(x);
    if (norm_.depth() == 0) return best_;
    levels_[0].assign(x.begin(), x.end());
    descend(0);
    return best_;
  }

 private:
  void descend(std::size_t k) {
    for (const auto& d : norm_.letters()) {
      step(norm_.matrix(), d, inv_c_, levels_[k], levels_[k + 1]);
      best_ = std::max(best_, euclidean(levels_[k + 1]));
      if (k + 1 < norm_.depth()) descend(k + 1);
    }
  }

  const TruncatedExtremalNorm& norm_;
  double inv_c_;
  std::vector<Vector> levels_;
  double best_ = 0.0;
};

double beam_eval(const TruncatedExtremalNorm& norm, std::span<const Scalar> x) {
  double best = euclidean(x);
  const double inv_c = 1.0 / norm.level();
  std::vector<Vector> level{Vector(x.begin(), x.end())};
  for (std::size_t k = 1; k <= norm.depth(); ++k) {
    std::vector<Vector> next;
    std::vector<double> size;
    next.reserve(level.size() * norm.letters().size());
    for (const auto& y : level) {
      for (const auto& d : norm.letters()) {
        Vector z;
        step(norm.matrix(), d, inv_c, y, z);
        size.push_back(euclidean(z));
        best = std::max(best, size.back());
        next.push_back(std::move(z));
      }
    }
    if (next.size() > norm.beam_width()) {
      std::vector<std::size_t> order(next.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t i, std::size_t j) { return size[i] > size[j]; });
      std::vector<Vector> kept;
      kept.reserve(norm.beam_width());
      for (std::size_t i = 0; i < norm.beam_width(); ++i) kept.push_back(std::move(next[order[i]]));
      next = std::move(kept);
    }
    level = std::move(next);
  }
  return best;
}

Vector random_vector(std::size_t n, bool complex, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector x(n);
  for (auto& v : x) {
    const double re = gauss(rng);
    const double im = complex ? gauss(rng) : 0.0;
    v = Scalar(re, im);
  }
  return x;
}

Scalar random_phase(const TruncatedExtremalNorm& norm, std::mt19937_64& rng) {
  const int q = norm.complex_semantics() ? norm.grid_q() : 2;
  std::uniform_int_distribution<int> pick(0, q - 1);
  return root_of_unity(pick(rng), q);
}

void record(AxiomCheck& check, double violation) {
  check.worst = check.failures == 0 && check.worst == 0.0 ? violation
                                                          : std::max(check.worst, violation);
  if (violation > kAxiomSlack) ++check.failures;
}

}  // namespace

TruncatedExtremalNorm build_norm(const Matrix& a, double c, std::size_t m,
                                 int grid_q, ExtremalNormOptions options) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InputError("norm level c must be positive");
  TruncatedExtremalNorm norm;
  norm.a_ = a;
  norm.c_ = c;
  norm.m_ = m;
  norm.grid_q_ = grid_q;
  norm.complex_ = uses_complex_semantics(a, grid_q);
  norm.beam_width_ = options.beam_width;
  if (norm.beam_width_ == 0) {
    const double base = norm.complex_ ? grid_q : 2.0;
    check_capacity(std::pow(base, static_cast<double>(a.size() - 1)), m);
  }
  norm.letters_ = search_alphabet(a.size(), grid_q, norm.complex_);
  norm.certified_upper_ = certified_mu_upper(a, m, grid_q);
  norm.level_warning_ = c <= norm.certified_upper_;
  return norm;
}

TruncatedExtremalNorm TruncatedExtremalNorm::with_depth(std::size_t m) const {
  if (beam_width_ == 0) check_capacity(static_cast<double>(letters_.size()), m);
  TruncatedExtremalNorm copy = *this;
  copy.m_ = m;
  return copy;
}

double eval_norm(const TruncatedExtremalNorm& norm, std::span<const Scalar> x) {
  if (x.size() != norm.matrix().size()) {
    throw DimensionError("vector and norm dimension mismatch");
  }
  if (norm.beam_width() > 0) return beam_eval(norm, x);
  return DepthFirstEval(norm).run(x);
}

ContractionReport contraction_check(const TruncatedExtremalNorm& norm,
                                    std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InputError("trials must be at least 1");
  const auto deeper = norm.with_depth(norm.depth() + 1);
  const auto shallower = norm.with_depth(norm.depth() > 0 ? norm.depth() - 1 : 0);
  std::mt19937_64 rng(seed);
  const Matrix& a = norm.matrix();
  const double c = norm.level();

  ContractionReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector x = random_vector(a.size(), norm.complex_semantics(), rng);
    const Vector ax = a * x;
    const double lhs = eval_norm(norm, ax);
    const double rhs = c * eval_norm(deeper, x);
    const double structural = rhs > 0.0 ? lhs / rhs : 0.0;
    report.max_structural_ratio = std::max(report.max_structural_ratio, structural);
    if (lhs > rhs * (1.0 + kAxiomSlack)) {
      ++report.structural_failures;
      report.structural_holds = false;
    }
    const double nx = eval_norm(norm, x);
    if (nx > 0.0) report.max_empirical_ratio = std::max(report.max_empirical_ratio, lhs / nx);
    const double px = eval_norm(shallower, x);
    if (px > 0.0) {
      report.max_empirical_ratio_previous =
          std::max(report.max_empirical_ratio_previous, eval_norm(shallower, ax) / px);
    }
  }
  return report;
}

AxiomReport verify_norm_axioms(const TruncatedExtremalNorm& norm,
                               std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InputError("trials must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t n = norm.matrix().size();
  const bool complex = norm.complex_semantics();

  AxiomReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector x = random_vector(n, complex, rng);
    const Vector y = random_vector(n, complex, rng);
    const double nx = eval_norm(norm, x);
    const double ny = eval_norm(norm, y);

    // Positivity, via the Euclidean term.
    const double ex = euclidean(x);
    record(report.positivity, ex > 0.0 ? (ex - nx) / ex : (nx > 0.0 ? 1.0 : 0.0));

    // Absolute homogeneity.
    const Scalar s(gauss(rng), complex ? gauss(rng) : 0.0);
    Vector sx = x;
    for (auto& v : sx) v *= s;
    const double expected = std::abs(s) * nx;
    record(report.homogeneity,
           expected > 0.0 ? std::abs(eval_norm(norm, sx) - expected) / expected : 0.0);

    // Triangle inequality.
    Vector sum = x;
    for (std::size_t i = 0; i < n; ++i) sum[i] += y[i];
    record(report.triangle, (eval_norm(norm, sum) - (nx + ny)) / (nx + ny));

    // Invariance under a random (grid) unimodular diagonal.
    Vector dx = x;
    for (auto& v : dx) v *= random_phase(norm, rng);
    record(report.absoluteness, std::abs(eval_norm(norm, dx) - nx) / nx);

    // Monotonicity: |z| <= |y| entrywise.
    Vector z = y;
    for (auto& v : z) v *= unit(rng) * random_phase(norm, rng);
    record(report.monotonicity, (eval_norm(norm, z) - ny) / ny);
  }
  return report;
}

double eval_absolute_norm(const AbsoluteNorm& norm, std::span<const Scalar> x) {
  if (const auto* w = std::get_if<WeightedLpNorm>(&norm)) return vector_norm(x, *w);
  return eval_norm(std::get<TruncatedExtremalNorm>(norm), x);
}

GapReport complexify_gap_search(const Matrix& a, const AbsoluteNorm& norm,
                                std::size_t trials, std::uint64_t seed) {
  if (!a.is_real()) throw InputError("gap search needs a real matrix");
  if (const auto* t = std::get_if<TruncatedExtremalNorm>(&norm)) {
    if (t->complex_semantics()) {
      throw InputError("gap search needs a norm defined over the reals");
    }
    if (t->matrix().size() != a.size()) throw DimensionError("norm dimension mismatch");
  } else if (std::get<WeightedLpNorm>(norm).size() != a.size()) {
    throw DimensionError("norm dimension mismatch");
  }
  const std::size_t n = a.size();
  auto modulus = [](std::span<const Scalar> v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::abs(v[i]);
    return out;
  };
  // ||x||_C = || |x| ||_R
  auto ratio = [&](const Vector& x) {
    const double den = eval_absolute_norm(norm, modulus(x));
    if (den == 0.0) return 0.0;
    return eval_absolute_norm(norm, modulus(a * x)) / den;
  };

  GapReport report;
  auto real_candidate = [&](const Vector& x) {
    const double r = ratio(x);
    report.real_sup = std::max(report.real_sup, r);
    report.complex_sup = std::max(report.complex_sup, r);
  };
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n, Scalar(0.0));
    e[j] = 1.0;
    real_candidate(e);
  }
  // Sign vectors scaled by the inverse weights are the vertices of a weighted
  // l-infinity ball.
  std::vector<double> inv_weight(n, 1.0);
  if (const auto* w = std::get_if<WeightedLpNorm>(&norm)) {
    for (std::size_t i = 0; i < n; ++i) inv_weight[i] = 1.0 / w->weights[i];
  }
  if (n <= 12) {
    for (const auto& d : enumerate_sign_diagonals(n, true)) {
      Vector x = d.phases();
      for (std::size_t i = 0; i < n; ++i) x[i] *= inv_weight[i];
      real_candidate(x);
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    real_candidate(random_vector(n, false, rng));
    report.complex_sup = std::max(report.complex_sup, ratio(random_vector(n, true, rng)));
  }
  report.gap = report.complex_sup - report.real_sup;
  return report;
}

}  // namespace absnorm
