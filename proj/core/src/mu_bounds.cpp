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

#include "absnorm/mu_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "absnorm/error.hpp"
#include "absnorm/parallel.hpp"
#include "absnorm/perron.hpp"
#include "absnorm/sign_equivalence.hpp"

namespace absnorm {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_search(double letters, std::size_t depth) {
  if (depth == 0) throw InputError("search depth must be at least 1");
  const double nodes = std::pow(letters, static_cast<double>(depth));
  if (nodes > kMaxSearchNodes) {
    throw CapacityError("search of " + std::to_string(static_cast<long long>(letters)) + "^" +
                        std::to_string(depth) + " words exceeds the node budget");
  }
}

double kth_root(double v, std::size_t k) {
  if (k == 1 || v == 0.0) return v;
  return std::pow(v, 1.0 / static_cast<double>(k));
}

// Values within this slack of the incumbent count as ties.
double tie_slack(double v) {
  return std::isfinite(v) ? 1e-12 * std::max(1.0, std::abs(v)) : 0.0;
}

// Checked before enumerating, since the alphabet alone can be huge.
double alphabet_size(const Matrix& a, int grid_q) {
  const double base = uses_complex_semantics(a, grid_q) ? grid_q : 2.0;
  return std::pow(base, static_cast<double>(a.size() - 1));
}

std::vector<UnimodularDiagonal> alphabet_for(const Matrix& a, int grid_q) {
  return search_alphabet(a.size(), grid_q, uses_complex_semantics(a, grid_q));
}

// Depth-first lower-bound search below a fixed first letter.
class LowerSearch {
 public:
  LowerSearch(const Matrix& a, const std::vector<UnimodularDiagonal>& letters,
              std::size_t max_depth)
      : a_(a), letters_(letters), max_depth_(max_depth),
        norm_node_(max_depth + 2), scaled_(max_depth + 2) {}

  void run(std::size_t first) {
    norm_node_[1] = a_;
    evaluate(1, first);
  }

  double best = kNegInf;
  std::vector<std::size_t> best_path;
  std::size_t nodes = 0;

 private:
  // Word = path_ + letter at depth k; norm_node_[k] = A D1 A ... D(k-1) A.
  void evaluate(std::size_t k, std::size_t letter) {
    scale_columns(norm_node_[k], letters_[letter].phases(), scaled_[k]);
    path_.push_back(letter);
    ++nodes;
    const double v = kth_root(spectral_radius(scaled_[k]), k);
    if (v > best + tie_slack(best)) {
      best = v;
      best_path = path_;
    }
    if (k < max_depth_) {
      multiply(scaled_[k], a_, norm_node_[k + 1]);
      for (std::size_t d = 0; d < letters_.size(); ++d) evaluate(k + 1, d);
    }
    path_.pop_back();
  }

  const Matrix& a_;
  const std::vector<UnimodularDiagonal>& letters_;
  std::size_t max_depth_;
  std::vector<Matrix> norm_node_;
  std::vector<Matrix> scaled_;
  std::vector<std::size_t> path_;
};

// Depth-first upper-bound search; node at depth k is A D1 A ... D(k-1) A.
class UpperSearch {
 public:
  UpperSearch(const Matrix& a, const std::vector<UnimodularDiagonal>& letters,
              std::size_t max_depth, double threshold, bool prune)
      : level_raw(max_depth + 1, kNegInf), level_rooted(max_depth + 1, kNegInf),
        closed(max_depth + 1, kNegInf), a_(a), letters_(letters), max_depth_(max_depth),
        threshold_(threshold), prune_(prune), node_(max_depth + 2), scaled_(max_depth + 2) {}

  // Evaluates the depth-1 root; returns whether it should be expanded.
  bool run_root() {
    node_[1] = a_;
    return visit(1, false);
  }

  void run_subtree(std::size_t first) {
    node_[1] = a_;
    expand_child(1, first);
  }

  std::vector<double> level_raw;
  std::vector<double> level_rooted;
  std::vector<double> closed;
  std::size_t nodes = 0;
  std::size_t pruned = 0;

 private:
  void expand_child(std::size_t k, std::size_t letter) {
    scale_columns(node_[k], letters_[letter].phases(), scaled_[k]);
    multiply(scaled_[k], a_, node_[k + 1]);
    visit(k + 1, true);
  }

  bool visit(std::size_t k, bool recurse) {
    ++nodes;
    const double raw = spectral_norm(node_[k]);
    const double v = kth_root(raw, k);
    level_raw[k] = std::max(level_raw[k], raw);
    level_rooted[k] = std::max(level_rooted[k], v);
    if (prune_ && v <= threshold_) {
      closed[k] = std::max(closed[k], v);
      ++pruned;
      return false;
    }
    if (k >= max_depth_) return false;
    if (recurse) {
      for (std::size_t d = 0; d < letters_.size(); ++d) expand_child(k, d);
    }
    return true;
  }

  const Matrix& a_;
  const std::vector<UnimodularDiagonal>& letters_;
  std::size_t max_depth_;
  double threshold_;
  bool prune_;
  std::vector<Matrix> node_;
  std::vector<Matrix> scaled_;
};

struct UpperTrace {
  std::vector<double> level_raw;
  std::vector<double> level_rooted;
  std::vector<double> closed;
  std::size_t nodes = 0;
  std::size_t pruned = 0;
};

UpperTrace run_upper_search(const Matrix& a,
                            const std::vector<UnimodularDiagonal>& letters,
                            std::size_t max_depth, double threshold, bool prune,
                            unsigned threads) {
  UpperSearch root(a, letters, max_depth, threshold, prune);
  const bool expand = root.run_root();
  std::vector<UpperSearch> parts;
  if (expand) {
    parts.reserve(letters.size());
    for (std::size_t d = 0; d < letters.size(); ++d) {
      parts.emplace_back(a, letters, max_depth, threshold, prune);
    }
    parallel_for(letters.size(), threads, [&](std::size_t d) { parts[d].run_subtree(d); });
  }
  UpperTrace trace{root.level_raw, root.level_rooted, root.closed, root.nodes, root.pruned};
  for (const auto& p : parts) {
    for (std::size_t k = 0; k <= max_depth; ++k) {
      trace.level_raw[k] = std::max(trace.level_raw[k], p.level_raw[k]);
      trace.level_rooted[k] = std::max(trace.level_rooted[k], p.level_rooted[k]);
      trace.closed[k] = std::max(trace.closed[k], p.closed[k]);
    }
    trace.nodes += p.nodes;
    trace.pruned += p.pruned;
  }
  return trace;
}

}  // namespace

bool uses_complex_semantics(const Matrix& a, int grid_q) {
  return !a.is_real() || grid_q > 2;
}

LowerBound mu_lower_bound(const Matrix& a, std::size_t max_depth, int grid_q,
                          unsigned threads) {
  check_search(alphabet_size(a, grid_q), max_depth);
  const auto letters = alphabet_for(a, grid_q);

  std::vector<LowerSearch> parts;
  parts.reserve(letters.size());
  for (std::size_t d = 0; d < letters.size(); ++d) parts.emplace_back(a, letters, max_depth);
  parallel_for(letters.size(), threads, [&](std::size_t d) { parts[d].run(d); });

  LowerBound result;
  result.value = kNegInf;
  const std::vector<std::size_t>* best_path = nullptr;
  for (const auto& p : parts) {
    result.nodes += p.nodes;
    if (p.best > result.value + tie_slack(result.value)) {
      result.value = p.best;
      best_path = &p.best_path;
    }
  }
  result.value = std::max(result.value, 0.0);
  if (best_path) {
    for (std::size_t idx : *best_path) result.witness.letters.push_back(letters[idx]);
  }
  return result;
}

UpperBound mu_upper_bound(const Matrix& a, std::size_t max_depth, int grid_q,
                          double prune_delta, unsigned threads) {
  if (!(prune_delta >= 0.0)) throw InputError("prune_delta must be >= 0");
  check_search(alphabet_size(a, grid_q), max_depth);
  const auto letters = alphabet_for(a, grid_q);

  UpperBound result;
  const bool prune = prune_delta > 0.0;
  double threshold = -1.0;
  if (prune) {
    const LowerBound alpha = mu_lower_bound(a, std::min<std::size_t>(max_depth, 2), grid_q, threads);
    result.nodes += alpha.nodes;
    threshold = alpha.value + prune_delta;
    result.prune_threshold = threshold;
  }

  const UpperTrace trace = run_upper_search(a, letters, max_depth, threshold, prune, threads);
  result.nodes += trace.nodes;
  result.pruned = trace.pruned;

  double closed_so_far = kNegInf;
  result.value = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= max_depth; ++k) {
    const double bound = std::max(closed_so_far, trace.level_rooted[k]);
    result.level_bounds.push_back(bound);
    result.value = std::min(result.value, bound);
    closed_so_far = std::max(closed_so_far, trace.closed[k]);
  }
  return result;
}

std::vector<double> word_norm_maxima(const Matrix& a, std::size_t max_depth,
                                     int grid_q, unsigned threads) {
  check_search(alphabet_size(a, grid_q), max_depth);
  const auto letters = alphabet_for(a, grid_q);
  const UpperTrace trace = run_upper_search(a, letters, max_depth, -1.0, false, threads);
  return {trace.level_raw.begin() + 1, trace.level_raw.end()};
}

const char* to_string(Shortcut s) noexcept {
  switch (s) {
    case Shortcut::none:
      return "none";
    case Shortcut::sign_equivalent:
      return "sign_equivalent";
    case Shortcut::nonnegative:
      return "nonnegative";
  }
  return "?";
}

const char* to_string(GrowthVerdict v) noexcept {
  switch (v) {
    case GrowthVerdict::bounded:
      return "bounded";
    case GrowthVerdict::growing:
      return "growing";
    case GrowthVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// Certified upper end of the rho(|A|) enclosure, also on non-convergence.
double abs_radius_cap(const Matrix& a, double tol) {
  try {
    return nonneg_spectral_radius(entrywise_abs(a), tol).bracket.upper;
  } catch (const PerronNonConvergence& e) {
    return e.bracket().upper;
  }
}

}  // namespace

BoundsReport mu_bounds(const Matrix& a, const BoundsConfig& config) {
  if (config.max_depth == 0) throw InputError("max_depth must be at least 1");
  if (!(config.tol > 0.0)) throw InputError("tol must be positive");
  const bool complex_semantics = uses_complex_semantics(a, config.grid_q);

  BoundsReport report;
  if (complex_semantics) report.grid_q = config.grid_q;

  if (config.use_shortcut) {
    const auto verdict = sign_equivalent_to_abs(a);
    if (const auto* w = std::get_if<EquivalenceWitness>(&verdict)) {
      try {
        const PerronResult pr = nonneg_spectral_radius(entrywise_abs(a), config.tol);
        report.lower = report.upper = pr.rho;
        report.exact = true;
        report.shortcut = is_nonnegative(a) ? Shortcut::nonnegative : Shortcut::sign_equivalent;
        // A (conj D1)(conj D2) = D1 |A| conj(D1) is similar to |A|.
        report.lower_witness.letters.push_back(w->left.conj() * w->right.conj());
        report.depth_explored = 1;
        report.upper_certified = true;
        return report;
      } catch (const PerronNonConvergence&) {
        // Fall through to the generic engine.
      }
    }
  }

  const LowerBound lower = mu_lower_bound(a, config.max_depth, config.grid_q, config.threads);
  const UpperBound upper =
      mu_upper_bound(a, config.max_depth, config.grid_q, config.prune_delta, config.threads);
  const double cap = abs_radius_cap(a, config.tol);

  report.lower = lower.value;
  report.lower_witness = lower.witness;
  report.upper = std::min(upper.value, cap);
  report.upper_certified = !complex_semantics || a.size() == 1 || cap <= upper.value;
  report.upper = std::max(report.upper, report.lower);
  report.depth_explored = config.max_depth;
  report.nodes_visited = lower.nodes + upper.nodes;
  report.exact = report.upper - report.lower <= config.tol;
  return report;
}

GrowthReport check_growth_condition(const Matrix& a, const GrowthQuery& query,
                                    int grid_q, unsigned threads) {
  if (!query.level && !(query.eps > 0.0)) throw InputError("growth eps must be positive");
  if (query.max_depth == 0) throw InputError("growth depth must be at least 1");
  if (query.level && !(*query.level > 0.0)) {
    throw InputError("growth level must be positive");
  }
  const std::size_t m = query.max_depth;
  GrowthReport report;
  report.level = query.level ? *query.level : spectral_radius(a) + query.eps;
  const double c = report.level;

  const auto beta = word_norm_maxima(a, m, grid_q, threads);
  double beta_upper = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= m; ++k) {
    report.sequence.push_back(beta[k - 1] / std::pow(c, static_cast<double>(k)));
    beta_upper = std::min(beta_upper, kth_root(beta[k - 1], k));
  }
  for (std::size_t k = 1; k < m; ++k) {
    const double prev = report.sequence[k - 1];
    report.ratios.push_back(prev == 0.0 ? 0.0 : report.sequence[k] / prev);
  }

  const bool complex_semantics = uses_complex_semantics(a, grid_q);
  const double cap = abs_radius_cap(a, 1e-12);
  report.mu_lower = mu_lower_bound(a, m, grid_q, threads).value;
  report.mu_upper = (!complex_semantics || a.size() == 1) ? std::min(beta_upper, cap) : cap;
  // Rounding can leave the two sides a few ulps apart in the wrong order.
  report.mu_upper = std::max(report.mu_upper, report.mu_lower);

  if (report.mu_lower > c) {
    report.verdict = GrowthVerdict::growing;
    report.certified = true;
    return report;
  }
  if (report.mu_upper < c) {
    report.verdict = GrowthVerdict::bounded;
    report.certified = true;
    return report;
  }

  const auto& g = report.sequence;
  const std::size_t window = std::min<std::size_t>(std::max<std::size_t>(3, m / 4), m - 1);
  bool non_increasing = true;
  bool increasing = window > 0;
  for (std::size_t k = m - 1 - window; k + 1 < m; ++k) {
    if (g[k + 1] > g[k] * (1.0 + 1e-12)) non_increasing = false;
    if (!(g[k + 1] > g[k])) increasing = false;
  }
  if (m >= 2 && non_increasing && g[m - 1] <= g[0] * (1.0 + 1e-12)) {
    report.verdict = GrowthVerdict::bounded;
  } else if (increasing && g[m - 1] > 10.0 * g[0]) {
    report.verdict = GrowthVerdict::growing;
  }
  return report;
}

}  // namespace absnorm
