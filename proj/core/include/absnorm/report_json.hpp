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

// JSON forms of the engine reports. Every to_json / from_json pair
// round-trips exactly: doubles are emitted in shortest round-trip form.
//
// BoundsReport:
//   {"lower", "upper", "witness", "depth", "nodes", "exact", "shortcut",
//    "grid_q": q | null, "upper_certified"}
// The witness is a list of letters. With "grid_q": null (real semantics) a
// letter is a sign vector; otherwise it is a list of phase indices mod q,
// with [re, im] standing in for a phase that is not on the grid.

#ifndef ABSNORM_REPORT_JSON_HPP
#define ABSNORM_REPORT_JSON_HPP

#include <optional>

#include <nlohmann/json.hpp>

#include "absnorm/extremal_norm.hpp"
#include "absnorm/mu_bounds.hpp"
#include "absnorm/sign_equivalence.hpp"

namespace absnorm {

nlohmann::json witness_to_json(const DiagonalWord& word, std::optional<int> grid_q);
DiagonalWord witness_from_json(const nlohmann::json& j, std::optional<int> grid_q);

nlohmann::json bounds_to_json(const BoundsReport& r);
BoundsReport bounds_from_json(const nlohmann::json& j);

nlohmann::json growth_to_json(const GrowthReport& r);
GrowthReport growth_from_json(const nlohmann::json& j);

// {"equivalent": true, "left": [...], "right": [...]} or
// {"equivalent": false, "cycle": [...], "phase_product": [re, im]}.
// Phases are written as [re, im] pairs for both fields.
nlohmann::json sign_equivalence_to_json(const SignEquivalenceResult& r);
SignEquivalenceResult sign_equivalence_from_json(const nlohmann::json& j);

// Norm descriptor {"A": <matrix>, "c": f, "m": k, "grid_q": q}.
struct NormDescriptor {
  Matrix a;
  double c = 1.0;
  std::size_t m = 0;
  int grid_q = 2;

  friend bool operator==(const NormDescriptor&, const NormDescriptor&) = default;
};

nlohmann::json descriptor_to_json(const NormDescriptor& d);
NormDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json axioms_to_json(const AxiomReport& r);
nlohmann::json contraction_to_json(const ContractionReport& r);
nlohmann::json gap_to_json(const GapReport& r);

}  // namespace absnorm

#endif  // ABSNORM_REPORT_JSON_HPP
