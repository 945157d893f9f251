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

#include "absnorm/report_json.hpp"

#include <cmath>
#include <string>

#include "absnorm/error.hpp"
#include "absnorm/matrix_io.hpp"

namespace absnorm {
namespace {

using nlohmann::json;

// Wraps nlohmann's exceptions so callers only see InputError.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
}

json complex_pair(Scalar z) { return json::array({z.real(), z.imag()}); }

Scalar pair_to_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json phases_to_json(const UnimodularDiagonal& d) {
  json out = json::array();
  for (const auto& z : d.phases()) out.push_back(complex_pair(z));
  return out;
}

UnimodularDiagonal phases_from_json(const json& j) {
  Vector phases;
  for (const auto& z : j) phases.push_back(pair_to_complex(z));
  return UnimodularDiagonal(std::move(phases));
}

Shortcut shortcut_from_string(const std::string& s) {
  if (s == "none") return Shortcut::none;
  if (s == "sign_equivalent") return Shortcut::sign_equivalent;
  if (s == "nonnegative") return Shortcut::nonnegative;
  throw InputError("unknown shortcut tag: " + s);
}

GrowthVerdict verdict_from_string(const std::string& s) {
  if (s == "bounded") return GrowthVerdict::bounded;
  if (s == "growing") return GrowthVerdict::growing;
  if (s == "inconclusive") return GrowthVerdict::inconclusive;
  throw InputError("unknown growth verdict: " + s);
}

json check_to_json(const AxiomCheck& c) {
  return {{"failures", c.failures}, {"worst", c.worst}};
}

}  // namespace

json witness_to_json(const DiagonalWord& word, std::optional<int> grid_q) {
  json out = json::array();
  for (const auto& letter : word.letters) {
    json entries = json::array();
    for (const auto& z : letter.phases()) {
      if (!grid_q) {
        entries.push_back(z.real() < 0.0 ? -1 : 1);
      } else if (auto k = phase_index(z, *grid_q)) {
        entries.push_back(*k);
      } else {
        entries.push_back(complex_pair(z));
      }
    }
    out.push_back(std::move(entries));
  }
  return out;
}

DiagonalWord witness_from_json(const json& j, std::optional<int> grid_q) {
  return guarded([&] {
    DiagonalWord word;
    for (const auto& letter : j) {
      Vector phases;
      for (const auto& e : letter) {
        if (e.is_array()) {
          phases.push_back(pair_to_complex(e));
        } else if (!grid_q) {
          const int s = e.get<int>();
          if (s != 1 && s != -1) throw InputError("sign witness entries must be +1 or -1");
          phases.emplace_back(static_cast<double>(s), 0.0);
        } else {
          phases.push_back(root_of_unity(e.get<long long>(), *grid_q));
        }
      }
      word.letters.emplace_back(std::move(phases));
    }
    return word;
  });
}

json bounds_to_json(const BoundsReport& r) {
  json j;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["witness"] = witness_to_json(r.lower_witness, r.grid_q);
  j["depth"] = r.depth_explored;
  j["nodes"] = r.nodes_visited;
  j["exact"] = r.exact;
  j["shortcut"] = to_string(r.shortcut);
  j["grid_q"] = r.grid_q ? json(*r.grid_q) : json(nullptr);
  j["upper_certified"] = r.upper_certified;
  return j;
}

BoundsReport bounds_from_json(const json& j) {
  return guarded([&] {
    BoundsReport r;
    r.lower = j.at("lower").get<double>();
    r.upper = j.at("upper").get<double>();
    if (!j.at("grid_q").is_null()) r.grid_q = j.at("grid_q").get<int>();
    r.lower_witness = witness_from_json(j.at("witness"), r.grid_q);
    r.depth_explored = j.at("depth").get<std::size_t>();
    r.nodes_visited = j.at("nodes").get<std::size_t>();
    r.exact = j.at("exact").get<bool>();
    r.shortcut = shortcut_from_string(j.at("shortcut").get<std::string>());
    r.upper_certified = j.value("upper_certified", true);
    return r;
  });
}

json growth_to_json(const GrowthReport& r) {
  return {{"verdict", to_string(r.verdict)}, {"level", r.level},
          {"sequence", r.sequence},          {"ratios", r.ratios},
          {"mu_lower", r.mu_lower},          {"mu_upper", r.mu_upper},
          {"certified", r.certified}};
}

GrowthReport growth_from_json(const json& j) {
  return guarded([&] {
    GrowthReport r;
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.level = j.at("level").get<double>();
    r.sequence = j.at("sequence").get<std::vector<double>>();
    r.ratios = j.at("ratios").get<std::vector<double>>();
    r.mu_lower = j.at("mu_lower").get<double>();
    r.mu_upper = j.at("mu_upper").get<double>();
    r.certified = j.at("certified").get<bool>();
    return r;
  });
}

json sign_equivalence_to_json(const SignEquivalenceResult& r) {
  if (const auto* w = std::get_if<EquivalenceWitness>(&r)) {
    return {{"equivalent", true}, {"left", phases_to_json(w->left)},
            {"right", phases_to_json(w->right)}};
  }
  const auto& c = std::get<InconsistencyCertificate>(r);
  return {{"equivalent", false}, {"cycle", c.nodes},
          {"phase_product", complex_pair(c.phase_product)}};
}

SignEquivalenceResult sign_equivalence_from_json(const json& j) {
  return guarded([&]() -> SignEquivalenceResult {
    if (j.at("equivalent").get<bool>()) {
      return EquivalenceWitness{phases_from_json(j.at("left")),
                                phases_from_json(j.at("right"))};
    }
    return InconsistencyCertificate{j.at("cycle").get<std::vector<std::size_t>>(),
                                    pair_to_complex(j.at("phase_product"))};
  });
}

json descriptor_to_json(const NormDescriptor& d) {
  return {{"A", matrix_to_json(d.a)}, {"c", d.c}, {"m", d.m}, {"grid_q", d.grid_q}};
}

NormDescriptor descriptor_from_json(const json& j) {
  return guarded([&] {
    NormDescriptor d;
    d.a = matrix_from_json(j.at("A"));
    d.c = j.at("c").get<double>();
    const auto m = j.at("m").get<long long>();
    if (m < 0) throw InputError("norm depth m must be nonnegative");
    d.m = static_cast<std::size_t>(m);
    d.grid_q = j.value("grid_q", 2);
    if (!(d.c > 0.0) || !std::isfinite(d.c)) throw InputError("norm level c must be positive");
    return d;
  });
}

json axioms_to_json(const AxiomReport& r) {
  return {{"trials", r.trials},
          {"passed", r.passed()},
          {"positivity", check_to_json(r.positivity)},
          {"homogeneity", check_to_json(r.homogeneity)},
          {"triangle", check_to_json(r.triangle)},
          {"absoluteness", check_to_json(r.absoluteness)},
          {"monotonicity", check_to_json(r.monotonicity)}};
}

json contraction_to_json(const ContractionReport& r) {
  return {{"trials", r.trials},
          {"structural_holds", r.structural_holds},
          {"structural_failures", r.structural_failures},
          {"max_structural_ratio", r.max_structural_ratio},
          {"max_empirical_ratio", r.max_empirical_ratio},
          {"max_empirical_ratio_previous", r.max_empirical_ratio_previous}};
}

json gap_to_json(const GapReport& r) {
  return {{"real_sup", r.real_sup}, {"complex_sup", r.complex_sup}, {"gap", r.gap}};
}

}  // namespace absnorm
