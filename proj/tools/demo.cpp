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

// Self-check suite: each claim is recomputed from scratch and printed with
// its verdict. Exit status 1 if any claim fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "absnorm/extremal_norm.hpp"
#include "absnorm/mu_bounds.hpp"
#include "absnorm/perron.hpp"
#include "absnorm/sign_equivalence.hpp"
#include "demo.hpp"

namespace absnorm::demo {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

class Suite {
 public:
  void check(std::string name, const std::function<bool(std::string&)>& body) {
    Claim c{std::move(name), false, {}};
    try {
      c.pass = body(c.detail);
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    claims_.push_back(std::move(c));
  }

  std::vector<Claim> claims() const { return claims_; }

 private:
  std::vector<Claim> claims_;
};

BoundsReport bounds(const Matrix& a, std::size_t depth, bool shortcut, unsigned threads) {
  BoundsConfig cfg;
  cfg.max_depth = depth;
  cfg.use_shortcut = shortcut;
  cfg.threads = threads;
  return mu_bounds(a, cfg);
}

}  // namespace

std::vector<Claim> collect_claims(const Options& options) {
  const std::uint64_t seed = options.seed;
  const std::size_t trials = options.trials;
  const unsigned threads = options.threads;
  Suite suite;
  const Matrix corollary = Matrix::real({{1, 1}, {-1, -1}});
  const Matrix hadamard = Matrix::real({{1, 1}, {1, -1}});

  suite.check("rank-one fixture: rho(A) = 0, ||A||_2 = rho(|A|) = 2", [&](std::string& d) {
    const double rho = spectral_radius(corollary);
    const double norm = spectral_norm(corollary);
    const double abs_rho = nonneg_spectral_radius(entrywise_abs(corollary), 1e-12).rho;
    d = "rho=" + num(rho) + " norm=" + num(norm) + " rho|A|=" + num(abs_rho);
    return near(rho, 0, 1e-9) && near(norm, 2, 1e-9) && near(abs_rho, 2, 1e-9);
  });
  suite.check("rank-one fixture is sign equivalent to |A|", [&](std::string&) {
    return std::holds_alternative<EquivalenceWitness>(sign_equivalent_to_abs(corollary));
  });
  for (bool shortcut : {true, false}) {
    suite.check(std::string("rank-one fixture: mu(A) = 2 at depth 1 (") +
                    (shortcut ? "shortcut" : "generic search") + ")",
                [&](std::string& d) {
                  const auto r = bounds(corollary, 1, shortcut, threads);
                  d = "[" + num(r.lower) + ", " + num(r.upper) + "]";
                  return near(r.lower, 2, 1e-9) && near(r.upper, 2, 1e-9);
                });
  }

  suite.check("Hadamard fixture is not sign equivalent to |A|", [&](std::string&) {
    return std::holds_alternative<InconsistencyCertificate>(sign_equivalent_to_abs(hadamard));
  });
  suite.check("Hadamard fixture: mu(A) = sqrt(2) < rho(|A|) = 2", [&](std::string& d) {
    const auto r = bounds(hadamard, 1, true, threads);
    const double abs_rho = nonneg_spectral_radius(entrywise_abs(hadamard), 1e-12).rho;
    d = "[" + num(r.lower) + ", " + num(r.upper) + "] rho|A|=" + num(abs_rho);
    return near(r.lower, std::sqrt(2.0), 1e-9) && near(r.upper, std::sqrt(2.0), 1e-9) &&
           near(abs_rho, 2, 1e-9);
  });

  const std::vector<Matrix> nonnegative = {
      Matrix::real({{2, 1}, {1, 3}}),
      Matrix::real({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
      Matrix::real({{1, 1}, {0, 1}}),
      Matrix::real({{0.5, 0.2, 0.1}, {0.3, 0.1, 0.6}, {0.2, 0.7, 0.3}}),
  };
  for (std::size_t i = 0; i < nonnegative.size(); ++i) {
    const Matrix& b = nonnegative[i];
    suite.check("nonnegative example " + std::to_string(i + 1) + ": mu(A) = rho(A)",
                [&](std::string& d) {
                  const auto r = bounds(b, 6, true, threads);
                  const double rho = nonneg_spectral_radius(b, 1e-9).rho;
                  d = "mu=" + num(r.lower) + " rho=" + num(rho);
                  return r.exact && near(r.lower, rho, 1e-6);
                });
    suite.check("nonnegative example " + std::to_string(i + 1) +
                    ": weighted l1 norm within 1e-3 of rho(A)",
                [&](std::string& d) {
                  const double rho = nonneg_spectral_radius(b, 1e-9).rho;
                  const double induced = induced_norm(b, optimal_weighted_l1(b, 1e-3));
                  d = "induced=" + num(induced);
                  return induced <= rho + 1e-3 + 1e-9;
                });
  }

  suite.check("rho(A) <= ||A|| for random weighted lp norms", [&](std::string& d) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> logw(-2, 2);
    const NormExponent exps[] = {NormExponent::one, NormExponent::two, NormExponent::inf};
    std::size_t violations = 0;
    for (std::size_t t = 0; t < 100; ++t) {
      const std::size_t n = 1 + t % 5;
      Matrix a(n, t % 2 ? Field::complex : Field::real);
      std::vector<double> w(n);
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = std::exp(logw(rng));
        for (std::size_t j = 0; j < n; ++j) {
          a.set(i, j, t % 2 ? Scalar(g(rng), g(rng)) : Scalar(g(rng)));
        }
      }
      if (spectral_radius(a) > induced_norm(a, WeightedLpNorm(w, exps[t % 3])) + 1e-9) ++violations;
    }
    d = std::to_string(violations) + " violations in 100 pairs";
    return violations == 0;
  });

  suite.check("extremal norm (c = 2.1, m = 6) satisfies the norm axioms", [&](std::string& d) {
    const auto norm = build_norm(corollary, 2.1, 6, 2);
    const auto r = verify_norm_axioms(norm, trials, seed);
    d = std::to_string(r.trials) + " trials";
    return r.passed();
  });
  suite.check("extremal norm (c = 2.1, m = 6) contracts: ||Ax|| <= c ||x||", [&](std::string& d) {
    const auto norm = build_norm(corollary, 2.1, 6, 2);
    const auto r = contraction_check(norm, trials, seed);
    d = "empirical ratio " + num(r.max_empirical_ratio);
    return r.structural_holds && r.max_empirical_ratio <= 2.1 + 1e-12;
  });

  suite.check("growth at c = 0.5: growing with ratio 4", [&](std::string& d) {
    GrowthQuery q;
    q.level = 0.5;
    const auto r = check_growth_condition(corollary, q, 2, threads);
    bool ratios_ok = !r.ratios.empty();
    for (double x : r.ratios) ratios_ok = ratios_ok && near(x, 4, 1e-6);
    d = to_string(r.verdict);
    return r.verdict == GrowthVerdict::growing && ratios_ok;
  });
  suite.check("growth at c = 2.5: bounded", [&](std::string& d) {
    GrowthQuery q;
    q.level = 2.5;
    const auto r = check_growth_condition(corollary, q, 2, threads);
    d = to_string(r.verdict);
    return r.verdict == GrowthVerdict::bounded;
  });

  return suite.claims();
}

int report_claims(const std::vector<Claim>& claims, const Options& options, bool as_json,
                  std::ostream& out) {
  bool all = true;
  for (const auto& c : claims) all = all && c.pass;
  if (as_json) {
    nlohmann::json j;
    j["seed"] = options.seed;
    j["trials"] = options.trials;
    j["claims"] = nlohmann::json::array();
    for (const auto& c : claims) {
      j["claims"].push_back({{"claim", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["passed"] = all;
    out << j.dump(2) << '\n';
  } else {
    out << "seed: " << options.seed << "  trials: " << options.trials << '\n';
    for (const auto& c : claims) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << '\n';
    }
    out << (all ? "all claims pass" : "some claims FAILED") << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace absnorm::demo
