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

#include "absnorm/sign_equivalence.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "absnorm/error.hpp"

namespace absnorm {
namespace {

// Graph vertices: rows are 0..n-1, columns are n..2n-1.
struct Propagation {
  std::size_t n;
  std::vector<std::optional<Scalar>> value;  // d_i for rows, e_j for columns
  std::vector<std::ptrdiff_t> parent;
  std::vector<std::size_t> depth;

  bool is_row(std::size_t v) const { return v < n; }
};

Scalar unit_phase(Scalar a) { return a / std::abs(a); }

std::vector<std::size_t> path_to_root(const Propagation& p, std::size_t v) {
  std::vector<std::size_t> path{v};
  while (p.parent[v] >= 0) {
    v = static_cast<std::size_t>(p.parent[v]);
    path.push_back(v);
  }
  return path;
}

// Cycle through the tree paths of u and v plus the non-tree edge (u, v).
InconsistencyCertificate make_certificate(const Matrix& a, const Propagation& p,
                                          std::size_t u, std::size_t v) {
  auto pu = path_to_root(p, u);
  auto pv = path_to_root(p, v);
  // Trim the common tail above the lowest common ancestor.
  while (pu.size() >= 2 && pv.size() >= 2 &&
         pu[pu.size() - 2] == pv[pv.size() - 2]) {
    pu.pop_back();
    pv.pop_back();
  }
  // Closed walk: u ... lca ... v, then back to u via the edge (v, u).
  std::vector<std::size_t> walk(pu.begin(), pu.end());
  for (std::size_t i = pv.size() - 1; i-- > 0;) walk.push_back(pv[i]);

  // Rotate so the walk starts at the smallest row vertex.
  std::size_t start = 0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (p.is_row(walk[i]) && (!p.is_row(walk[start]) || walk[i] < walk[start])) {
      start = i;
    }
  }
  std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(start), walk.end());

  const std::size_t n = p.n;
  InconsistencyCertificate cert;
  cert.phase_product = Scalar(1.0);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const std::size_t x = walk[i];
    const std::size_t y = walk[(i + 1) % walk.size()];
    // Edge row -> column contributes s, column -> row contributes conj(s).
    if (p.is_row(x)) {
      cert.phase_product *= unit_phase(a(x, y - n));
    } else {
      cert.phase_product *= std::conj(unit_phase(a(y, x - n)));
    }
    cert.nodes.push_back(p.is_row(x) ? x : x - n);
  }
  return cert;
}

}  // namespace

SignEquivalenceResult sign_equivalent_to_abs(const Matrix& a, double tol) {
  if (!(tol > 0.0) || tol > 1e-6) {
    throw InputError("phase tolerance must lie in (0, 1e-6]");
  }
  const std::size_t n = a.size();
  Propagation p{n, std::vector<std::optional<Scalar>>(2 * n),
                std::vector<std::ptrdiff_t>(2 * n, -1),
                std::vector<std::size_t>(2 * n, 0)};

  auto neighbours = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar entry = p.is_row(v) ? a(v, k) : a(k, v - n);
      if (entry != Scalar(0.0)) out.push_back(p.is_row(v) ? k + n : k);
    }
    return out;
  };
  auto entry_phase = [&](std::size_t u, std::size_t v) {
    return p.is_row(u) ? unit_phase(a(u, v - n)) : unit_phase(a(v, u - n));
  };

  for (std::size_t root = 0; root < 2 * n; ++root) {
    if (p.value[root]) continue;
    p.value[root] = Scalar(1.0);
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      const Scalar du = *p.value[u];
      for (std::size_t v : neighbours(u)) {
        // d_row * e_col = s  =>  other = s * conj(known)
        const Scalar s = entry_phase(u, v);
        const Scalar implied = s * std::conj(du);
        if (!p.value[v]) {
          p.value[v] = implied;
          p.parent[v] = static_cast<std::ptrdiff_t>(u);
          p.depth[v] = p.depth[u] + 1;
          queue.push_back(v);
        } else if (std::abs(*p.value[v] - implied) > tol) {
          return make_certificate(a, p, u, v);
        }
      }
    }
  }

  Vector left(n);
  Vector right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = *p.value[i];
    right[i] = *p.value[i + n];
  }
  if (a.is_real()) {
    // Real propagation stays in {+1, -1}; strip any signed-zero noise.
    for (auto& v : left) v = Scalar(v.real(), 0.0);
    for (auto& v : right) v = Scalar(v.real(), 0.0);
  }
  return EquivalenceWitness{UnimodularDiagonal(std::move(left)),
                            UnimodularDiagonal(std::move(right))};
}

bool is_nonnegative(const Matrix& a) {
  for (const auto& v : a.data()) {
    if (v.imag() != 0.0 || v.real() < 0.0) return false;
  }
  return true;
}

}  // namespace absnorm
