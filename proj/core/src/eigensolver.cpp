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

// Dense eigenvalue and singular value kernels.
//
// eigenvalues(): Householder reduction to upper Hessenberg form, then the
// single-shift complex QR algorithm with Wilkinson shifts, exceptional shifts
// every 10 stalled iterations, and direct solution of trailing 2x2 blocks.
// Only the active window is updated since no Schur vectors are needed.
//
// spectral_norm(): one-sided (Hestenes) Jacobi on the columns of A; the
// singular values are the column norms at convergence.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absnorm/error.hpp"
#include "absnorm/matrix.hpp"

namespace absnorm {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

class Dense {
 public:
  explicit Dense(const Matrix& a) : n_(a.size()), v_(a.data().begin(), a.data().end()) {}
  Scalar& operator()(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<Scalar> v_;
};

void reduce_to_hessenberg(Dense& h) {
  const std::size_t n = h.size();
  std::vector<Scalar> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm = std::hypot(xnorm, std::abs(h(i, k)));
    if (xnorm == 0.0) continue;
    const Scalar x0 = h(k + 1, k);
    const Scalar phase = std::abs(x0) == 0.0 ? Scalar(1.0) : x0 / std::abs(x0);
    const Scalar alpha = -phase * xnorm;
    // v = x - alpha e1, normalized
    std::fill(v.begin(), v.end(), Scalar(0.0));
    v[k + 1] = x0 - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = h(i, k);
    double vnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm = std::hypot(vnorm, std::abs(v[i]));
    if (vnorm == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    // H <- (I - 2 v v^H) H
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s(0.0);
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
      s *= 2.0;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i] * s;
    }
    // H <- H (I - 2 v v^H)
    for (std::size_t i = 0; i < n; ++i) {
      Scalar s(0.0);
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
      s *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j]);
    }
    h(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

// Eigenvalues of [[a, b], [c, d]].
std::pair<Scalar, Scalar> eig2x2(Scalar a, Scalar b, Scalar c, Scalar d) {
  const Scalar half_tr = 0.5 * (a + d);
  const Scalar half_diff = 0.5 * (a - d);
  const Scalar disc = std::sqrt(half_diff * half_diff + b * c);
  return {half_tr + disc, half_tr - disc};
}

struct Givens {
  double c;
  Scalar s;
};

// G = [[c, s], [-conj(s), c]] with G [a; b] = [r; 0].
Givens make_givens(Scalar a, Scalar b) {
  const double abs_a = std::abs(a);
  const double abs_b = std::abs(b);
  if (abs_b == 0.0) return {1.0, Scalar(0.0)};
  if (abs_a == 0.0) return {0.0, Scalar(1.0)};
  const double rho = std::hypot(abs_a, abs_b);
  return {abs_a / rho, (a / abs_a) * std::conj(b) / rho};
}

}  // namespace

Vector eigenvalues(const Matrix& a) {
  const std::size_t n = a.size();
  Vector eig(n);
  if (n == 1) {
    eig[0] = a(0, 0);
    return eig;
  }
  Dense h(a);
  reduce_to_hessenberg(h);

  const std::size_t max_iterations = 30 * std::max<std::size_t>(n, 10);
  std::size_t total = 0;
  std::size_t stalled = 0;
  std::vector<Givens> rot(n);

  // Active window is [lo, hi]; hi shrinks as eigenvalues deflate.
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      double diag = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (diag == 0.0) {
        for (std::ptrdiff_t i = lo - 1; i <= hi; ++i) {
          for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(i - 1, 0); j <= hi; ++j) {
            diag = std::max(diag, std::abs(h(i, j)));
          }
        }
      }
      if (sub <= kEps * diag) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }

    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      stalled = 0;
      continue;
    }
    if (lo == hi - 1) {
      auto [l1, l2] = eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
      eig[lo] = l1;
      eig[hi] = l2;
      hi -= 2;
      stalled = 0;
      continue;
    }

    if (++total > max_iterations) {
      throw NonConvergenceError("Hessenberg QR did not converge", total);
    }
    ++stalled;

    Scalar shift;
    if (stalled % 10 == 0) {
      shift = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    } else {
      auto [l1, l2] = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
      shift = std::abs(l1 - h(hi, hi)) <= std::abs(l2 - h(hi, hi)) ? l1 : l2;
    }

    for (std::ptrdiff_t i = lo; i <= hi; ++i) h(i, i) -= shift;
    // H - shift I = Q R, accumulating R in place.
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rot[k] = g;
      for (std::ptrdiff_t j = k; j <= hi; ++j) {
        const Scalar x = h(k, j);
        const Scalar y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    // R Q: apply G^H from the right.
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      const Givens g = rot[k];
      const std::ptrdiff_t last = std::min(k + 2, hi);
      for (std::ptrdiff_t i = lo; i <= last; ++i) {
        const Scalar u = h(i, k);
        const Scalar v = h(i, k + 1);
        h(i, k) = g.c * u + std::conj(g.s) * v;
        h(i, k + 1) = -g.s * u + g.c * v;
      }
    }
    for (std::ptrdiff_t i = lo; i <= hi; ++i) h(i, i) += shift;
  }
  return eig;
}

double spectral_radius(const Matrix& a) {
  double rho = 0.0;
  for (const auto& lambda : eigenvalues(a)) rho = std::max(rho, std::abs(lambda));
  return rho;
}

double spectral_norm(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return std::abs(a(0, 0));
  // Column-major working copy.
  std::vector<Scalar> w(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[j * n + i] = a(i, j);
  }
  auto col = [&](std::size_t j) { return w.data() + j * n; };

  constexpr int kMaxSweeps = 60;
  // Rounding keeps |gamma| at a few ulps of sqrt(alpha beta) once converged.
  const double tol = static_cast<double>(n) * kEps;
  int sweep = 0;
  for (;; ++sweep) {
    if (sweep == kMaxSweeps) {
      throw NonConvergenceError("one-sided Jacobi did not converge",
                                static_cast<std::size_t>(sweep));
    }
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        Scalar* cp = col(p);
        Scalar* cq = col(q);
        double alpha = 0.0;
        double beta = 0.0;
        Scalar gamma(0.0);
        for (std::size_t i = 0; i < n; ++i) {
          alpha += std::norm(cp[i]);
          beta += std::norm(cq[i]);
          gamma += std::conj(cp[i]) * cq[i];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        // Unitary column phase makes the inner product real and positive.
        const Scalar phase = std::conj(gamma) / g;
        for (std::size_t i = 0; i < n; ++i) cq[i] *= phase;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < n; ++i) {
          const Scalar x = cp[i];
          const Scalar y = cq[i];
          cp[i] = c * x - s * y;
          cq[i] = s * x + c * y;
        }
      }
    }
    if (!rotated) break;
  }
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(col(j)[i]);
    best = std::max(best, std::sqrt(s));
  }
  return best;
}

}  // namespace absnorm
