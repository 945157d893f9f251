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

#ifndef ABSNORM_SIGN_EQUIVALENCE_HPP
#define ABSNORM_SIGN_EQUIVALENCE_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "absnorm/diagonal.hpp"
#include "absnorm/matrix.hpp"

namespace absnorm {

// A = left * |A| * right.
struct EquivalenceWitness {
  UnimodularDiagonal left;
  UnimodularDiagonal right;
};

// A closed walk r0 - c0 - r1 - c1 - ... - r0 through nonzero entries of A in
// the bipartite row/column support graph. `nodes` alternates row and column
// indices starting with a row; the walk closes back to nodes.front().
// phase_product is prod s(r_t, c_t) * conj(s(r_{t+1}, c_t)) with s = a/|a|,
// which equals 1 on every cycle of a sign-equivalent matrix.
struct InconsistencyCertificate {
  std::vector<std::size_t> nodes;
  Scalar phase_product;
};

using SignEquivalenceResult =
    std::variant<EquivalenceWitness, InconsistencyCertificate>;

inline constexpr double kDefaultPhaseTolerance = 1e-9;

// Decides whether A = D1 |A| D2 for unimodular diagonals D1, D2 by breadth-
// first propagation over each connected component of the support graph,
// starting from the lowest-index row (or column) of the component with a
// phase of 1. Requires 0 < tol <= 1e-6.
SignEquivalenceResult sign_equivalent_to_abs(
    const Matrix& a, double tol = kDefaultPhaseTolerance);

// True iff A is real with every entry >= 0. A complex-tagged matrix counts
// when all imaginary parts are exactly zero.
bool is_nonnegative(const Matrix& a);

}  // namespace absnorm

#endif  // ABSNORM_SIGN_EQUIVALENCE_HPP
