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

#include "absnorm/diagonal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "absnorm/error.hpp"

namespace absnorm {

UnimodularDiagonal::UnimodularDiagonal(Vector phases) : phases_(std::move(phases)) {
  if (phases_.empty()) throw DimensionError("diagonal must be nonempty");
  for (const auto& p : phases_) {
    if (!(std::abs(std::abs(p) - 1.0) <= 1e-12)) {
      throw InputError("diagonal entry does not have modulus one");
    }
  }
}

UnimodularDiagonal UnimodularDiagonal::identity(std::size_t n) {
  return UnimodularDiagonal(Vector(n, Scalar(1.0)));
}

UnimodularDiagonal UnimodularDiagonal::signs(const std::vector<int>& s) {
  Vector phases;
  phases.reserve(s.size());
  for (int v : s) {
    if (v != 1 && v != -1) throw InputError("sign entries must be +1 or -1");
    phases.emplace_back(static_cast<double>(v), 0.0);
  }
  return UnimodularDiagonal(std::move(phases));
}

bool UnimodularDiagonal::is_real() const noexcept {
  for (const auto& p : phases_) {
    if (p.imag() != 0.0) return false;
  }
  return true;
}

UnimodularDiagonal UnimodularDiagonal::conj() const {
  UnimodularDiagonal out = *this;
  for (auto& p : out.phases_) p = std::conj(p);
  return out;
}

UnimodularDiagonal UnimodularDiagonal::negated() const {
  UnimodularDiagonal out = *this;
  for (auto& p : out.phases_) p = -p;
  return out;
}

Matrix UnimodularDiagonal::to_matrix() const {
  Matrix m(size(), is_real() ? Field::real : Field::complex);
  for (std::size_t i = 0; i < size(); ++i) m.set(i, i, phases_[i]);
  return m;
}

UnimodularDiagonal operator*(const UnimodularDiagonal& a,
                             const UnimodularDiagonal& b) {
  if (a.size() != b.size()) throw DimensionError("diagonal dimension mismatch");
  UnimodularDiagonal out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.phases_[i] *= b.phases_[i];
  return out;
}

Scalar root_of_unity(long long k, int q) {
  if (q <= 0) throw InputError("grid order must be positive");
  k %= q;
  if (k < 0) k += q;
  if ((4 * k) % q == 0) {
    switch ((4 * k) / q) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / q;
  return {std::cos(angle), std::sin(angle)};
}

std::optional<int> phase_index(Scalar phase, int q) {
  if (q <= 0) return std::nullopt;
  const double turns = std::arg(phase) / (2.0 * std::numbers::pi) * q;
  long long k = std::llround(turns);
  const Scalar root = root_of_unity(k, q);
  if (std::abs(root - phase) > 1e-9) return std::nullopt;
  k %= q;
  if (k < 0) k += q;
  return static_cast<int>(k);
}

namespace {

// Mixed-radix lexicographic enumeration: digit i ranges over `radix` values,
// the first digit is most significant; with quotient the first digit is 0.
template <typename DigitToPhase>
std::vector<UnimodularDiagonal> enumerate_grid(std::size_t n, int radix,
                                               bool quotient,
                                               DigitToPhase to_phase) {
  std::size_t count = 1;
  for (std::size_t i = quotient ? 1 : 0; i < n; ++i) count *= static_cast<std::size_t>(radix);
  std::vector<UnimodularDiagonal> out;
  out.reserve(count);
  std::vector<int> digits(n, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rem = idx;
    for (std::size_t pos = n; pos-- > 0;) {
      if (quotient && pos == 0) {
        digits[pos] = 0;
        break;
      }
      digits[pos] = static_cast<int>(rem % static_cast<std::size_t>(radix));
      rem /= static_cast<std::size_t>(radix);
    }
    Vector phases(n);
    for (std::size_t i = 0; i < n; ++i) phases[i] = to_phase(digits[i]);
    out.emplace_back(std::move(phases));
  }
  return out;
}

}  // namespace

std::vector<UnimodularDiagonal> enumerate_sign_diagonals(std::size_t n,
                                                         bool quotient) {
  if (n == 0) throw DimensionError("dimension must be positive");
  if (n > kMaxSignDimension) {
    throw CapacityError("sign enumeration capped at n = " +
                        std::to_string(kMaxSignDimension));
  }
  return enumerate_grid(n, 2, quotient,
                        [](int d) { return Scalar(d == 0 ? 1.0 : -1.0, 0.0); });
}

std::vector<UnimodularDiagonal> enumerate_phase_diagonals(std::size_t n, int q,
                                                          bool quotient) {
  if (n == 0) throw DimensionError("dimension must be positive");
  if (q < 2 || q % 2 != 0) {
    throw InputError("phase grid order must be an even integer >= 2");
  }
  std::size_t reps = 1;
  for (std::size_t i = 1; i < n; ++i) {
    reps *= static_cast<std::size_t>(q);
    if (reps > kMaxPhaseGridSize) {
      throw CapacityError("phase grid q^(n-1) exceeds " +
                          std::to_string(kMaxPhaseGridSize));
    }
  }
  return enumerate_grid(n, q, quotient, [q](int d) { return root_of_unity(d, q); });
}

std::vector<UnimodularDiagonal> search_alphabet(std::size_t n, int q,
                                                bool complex_semantics) {
  if (!complex_semantics) return enumerate_sign_diagonals(n, true);
  return enumerate_phase_diagonals(n, q, true);
}

Matrix word_product(const Matrix& a, const DiagonalWord& word, bool terminal) {
  const std::size_t n = a.size();
  for (const auto& d : word.letters) {
    if (d.size() != n) throw DimensionError("word letter dimension mismatch");
  }
  if (terminal) {
    Matrix p = Matrix::identity(n, a.field());
    for (const auto& d : word.letters) p = scale_columns(p * a, d.phases());
    return p;
  }
  Matrix p = a;
  for (const auto& d : word.letters) p = scale_columns(p, d.phases()) * a;
  return p;
}

}  // namespace absnorm
