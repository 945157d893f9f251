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

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "absnorm/error.hpp"
#include "absnorm/extremal_norm.hpp"
#include "absnorm/matrix_io.hpp"
#include "absnorm/mu_bounds.hpp"
#include "absnorm/perron.hpp"
#include "absnorm/report_json.hpp"
#include "absnorm/sign_equivalence.hpp"
#include "demo.hpp"

namespace {

using namespace absnorm;
using nlohmann::json;

enum ExitCode { kOk = 0, kDemoFailure = 1, kInputError = 2, kComputeError = 3 };

struct RunConfig {
  std::string input;
  std::size_t depth = 6;
  double eps = 0.0;
  std::optional<double> level;
  int grid_q = 2;
  double prune_delta = 1e-3;
  double tol = 1e-9;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string format = "text";
  bool no_shortcut = false;
};

bool json_output(const RunConfig& cfg) { return cfg.format == "json"; }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string phase_text(Scalar z) {
  if (z.imag() == 0.0) return z.real() < 0 ? "-1" : "+1";
  return "(" + num(z.real()) + (z.imag() < 0 ? "" : "+") + num(z.imag()) + "i)";
}

std::string diagonal_text(const UnimodularDiagonal& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + phase_text(d[i]);
  return s + "]";
}

void validate(const RunConfig& cfg) {
  if (cfg.grid_q < 2 || cfg.grid_q % 2 != 0) throw InputError("--grid-q must be an even integer >= 2");
  if (cfg.depth == 0) throw InputError("--depth must be at least 1");
  if (!(cfg.tol > 0.0)) throw InputError("--tol must be positive");
  if (!(cfg.prune_delta >= 0.0)) throw InputError("--prune-delta must be >= 0");
  if (cfg.trials == 0) throw InputError("--trials must be at least 1");
}

int cmd_mu(const RunConfig& cfg) {
  const Matrix a = read_matrix(cfg.input);
  BoundsConfig bc;
  bc.max_depth = cfg.depth;
  bc.grid_q = cfg.grid_q;
  bc.prune_delta = cfg.prune_delta;
  bc.tol = cfg.tol;
  bc.use_shortcut = !cfg.no_shortcut;
  bc.threads = cfg.threads;
  const BoundsReport r = mu_bounds(a, bc);
  if (json_output(cfg)) {
    emit(bounds_to_json(r));
    return kOk;
  }
  std::cout << "mu(A) in [" << num(r.lower) << ", " << num(r.upper) << "]\n"
            << "exact: " << (r.exact ? "yes" : "no") << '\n'
            << "shortcut: " << to_string(r.shortcut) << '\n'
            << "depth: " << r.depth_explored << "  nodes: " << r.nodes_visited << '\n';
  if (r.grid_q) {
    std::cout << "phase grid: q = " << *r.grid_q
              << (r.upper_certified ? "" : " (upper bound is heuristic)") << '\n';
  }
  std::cout << "witness:";
  for (const auto& d : r.lower_witness.letters) std::cout << ' ' << diagonal_text(d);
  std::cout << '\n';
  return kOk;
}

int cmd_sign_equiv(const RunConfig& cfg) {
  const Matrix a = read_matrix(cfg.input);
  const double tol = std::min(cfg.tol, 1e-6);
  const auto r = sign_equivalent_to_abs(a, tol);
  if (json_output(cfg)) {
    emit(sign_equivalence_to_json(r));
    return kOk;
  }
  if (const auto* w = std::get_if<EquivalenceWitness>(&r)) {
    std::cout << "sign equivalent: A = D1 |A| D2\n"
              << "D1 = " << diagonal_text(w->left) << '\n'
              << "D2 = " << diagonal_text(w->right) << '\n';
  } else {
    const auto& c = std::get<InconsistencyCertificate>(r);
    std::cout << "not sign equivalent\ncycle:";
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
      std::cout << (i % 2 == 0 ? " r" : " c") << c.nodes[i];
    }
    std::cout << "\nphase product: " << phase_text(c.phase_product) << '\n';
  }
  return kOk;
}

int cmd_growth(const RunConfig& cfg) {
  const Matrix a = read_matrix(cfg.input);
  GrowthQuery q;
  q.eps = cfg.eps;
  q.max_depth = cfg.depth;
  q.level = cfg.level;
  const GrowthReport r = check_growth_condition(a, q, cfg.grid_q, cfg.threads);
  if (json_output(cfg)) {
    emit(growth_to_json(r));
    return kOk;
  }
  std::cout << "level c = " << num(r.level) << '\n'
            << "verdict: " << to_string(r.verdict) << (r.certified ? " (certified)" : " (heuristic)") << '\n'
            << "mu(A) in [" << num(r.mu_lower) << ", " << num(r.mu_upper) << "]\n"
            << "k  c^-k beta_k  ratio\n";
  for (std::size_t k = 0; k < r.sequence.size(); ++k) {
    std::cout << k + 1 << "  " << num(r.sequence[k]);
    if (k > 0) std::cout << "  " << num(r.ratios[k - 1]);
    std::cout << '\n';
  }
  return kOk;
}

int cmd_norm(const RunConfig& cfg) {
  const NormDescriptor d = descriptor_from_json(parse_json_text(read_text(cfg.input)));
  const auto norm = build_norm(d.a, d.c, d.m, d.grid_q);
  const auto axioms = verify_norm_axioms(norm, cfg.trials, cfg.seed);
  const auto contraction = contraction_check(norm, cfg.trials, cfg.seed);
  std::optional<GapReport> gap;
  if (!norm.complex_semantics()) gap = complexify_gap_search(d.a, norm, cfg.trials, cfg.seed);
  if (json_output(cfg)) {
    json j;
    j["seed"] = cfg.seed;
    j["norm"] = descriptor_to_json(d);
    j["level_warning"] = norm.level_warning();
    j["certified_mu_upper"] = norm.certified_upper();
    j["axioms"] = axioms_to_json(axioms);
    j["contraction"] = contraction_to_json(contraction);
    j["gap"] = gap ? gap_to_json(*gap) : json(nullptr);
    emit(j);
    return kOk;
  }
  std::cout << "seed: " << cfg.seed << "  trials: " << cfg.trials << '\n'
            << "norm: n = " << d.a.size() << ", c = " << num(d.c) << ", m = " << d.m
            << ", q = " << d.grid_q << '\n';
  if (norm.level_warning()) {
    std::cout << "warning: c does not exceed the certified bound mu(A) <= "
              << num(norm.certified_upper()) << '\n';
  }
  std::cout << "axioms: " << (axioms.passed() ? "pass" : "FAIL") << '\n'
            << "contraction (structural): " << (contraction.structural_holds ? "pass" : "FAIL") << '\n'
            << "empirical ratio: " << num(contraction.max_empirical_ratio)
            << " (depth m-1: " << num(contraction.max_empirical_ratio_previous) << ")\n";
  if (gap) {
    std::cout << "complexification gap: " << num(gap->gap) << " (real " << num(gap->real_sup)
              << ", complex " << num(gap->complex_sup) << ")\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on the smallest absolute-norm operator norm of a matrix"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--depth", cfg.depth, "Maximal word length")->capture_default_str();
    sub->add_option("--grid-q", cfg.grid_q, "Phase grid order; above 2 selects complex semantics")
        ->capture_default_str();
  };

  auto* mu = app.add_subcommand("mu", "Certified interval on mu(A)");
  mu->add_option("input", cfg.input, "Matrix file, or - for stdin")->required();
  add_search(mu);
  mu->add_option("--prune-delta", cfg.prune_delta, "Branch-and-bound slack (0 = exhaustive)")
      ->capture_default_str();
  mu->add_option("--tol", cfg.tol, "Width below which bounds count as exact")->capture_default_str();
  mu->add_flag("--no-shortcut", cfg.no_shortcut, "Skip the sign-equivalence shortcut");
  add_common(mu);

  auto* se = app.add_subcommand("sign-equiv", "Decide A = D1 |A| D2");
  se->add_option("input", cfg.input, "Matrix file, or - for stdin")->required();
  se->add_option("--tol", cfg.tol, "Phase tolerance")->capture_default_str();
  add_common(se);

  auto* growth = app.add_subcommand("growth", "Growth of c^-k max ||A D1 ... A Dk||");
  growth->add_option("input", cfg.input, "Matrix file, or - for stdin")->required();
  growth->add_option("--eps", cfg.eps, "Level offset: c = rho(A) + eps")->required();
  growth->add_option("--level", cfg.level, "Explicit level c (overrides rho(A) + eps)");
  add_search(growth);
  add_common(growth);

  auto* norm = app.add_subcommand("norm", "Check a truncated extremal norm descriptor");
  norm->add_option("input", cfg.input, "Descriptor file, or - for stdin")->required();
  norm->add_option("--trials", cfg.trials, "Random trials")->capture_default_str();
  norm->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  add_common(norm);

  auto* demo = app.add_subcommand("demo", "Reproduce the reference examples");
  demo->add_option("--trials", cfg.trials, "Random trials")->capture_default_str();
  demo->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  add_common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    validate(cfg);
    if (*mu) return cmd_mu(cfg);
    if (*se) return cmd_sign_equiv(cfg);
    if (*growth) return cmd_growth(cfg);
    if (*norm) return cmd_norm(cfg);
    const demo::Options opts{cfg.seed, cfg.trials, cfg.threads};
    return demo::report_claims(demo::collect_claims(opts), opts, json_output(cfg), std::cout);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const NonConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << '\n';
    return kComputeError;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kComputeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputeError;
  }
}
