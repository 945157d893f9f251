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

#ifndef ABSNORM_DIAGONAL_HPP
#define ABSNORM_DIAGONAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "absnorm/matrix.hpp"

namespace absnorm {

// Diagonal matrix whose entries all have modulus one. Over R these are the
// sign diagonals; over C the phases are arbitrary unit scalars, although the
// search engines only ever enumerate roots of unity.
class UnimodularDiagonal {
 public:
  UnimodularDiagonal() = default;
  // Throws InputError unless every | phase | is 1 to within 1e-12.
  explicit UnimodularDiagonal(Vector phases);

  static UnimodularDiagonal identity(std::size_t n);
  static UnimodularDiagonal signs(const std::vector<int>& s);

  std::size_t size() const noexcept { return phases_.size(); }
  const Vector& phases() const noexcept { return phases_; }
  Scalar operator[](std::size_t i) const { return phases_[i]; }

  bool is_real() const noexcept;
  UnimodularDiagonal conj() const;
  UnimodularDiagonal negated() const;

  Matrix to_matrix() const;

  friend UnimodularDiagonal operator*(const UnimodularDiagonal& a,
                                      const UnimodularDiagonal& b);
  friend bool operator==(const UnimodularDiagonal& a,
                         const UnimodularDiagonal& b) = default;

 private:
  Vector phases_;
};

// Indexes the product A D1 A D2 ... A Dk (terminal) or A D1 A ... Dk A
// (non-terminal).
struct DiagonalWord {
  std::vector<UnimodularDiagonal> letters;

  std::size_t length() const noexcept { return letters.size(); }
  friend bool operator==(const DiagonalWord& a, const DiagonalWord& b) = default;
};

// exp(2 pi i k / q), exact whenever the root is one of 1, i, -1, -i.
Scalar root_of_unity(long long k, int q);

// Index k in [0, q) with phase == exp(2 pi i k / q) to within 1e-9, if any.
std::optional<int> phase_index(Scalar phase, int q);

inline constexpr std::size_t kMaxSignDimension = 20;
inline constexpr std::size_t kMaxPhaseGridSize = 1'000'000;

// All 2^n sign diagonals (2^(n-1) with quotient, first entry +1), in
// lexicographic order with +1 before -1 and the first entry most significant.
std::vector<UnimodularDiagonal> enumerate_sign_diagonals(std::size_t n,
                                                         bool quotient);

// All diagonals with entries in the q-th roots of unity, lexicographic in the
// root index. Requires q >= 2 even and q^(n-1) <= kMaxPhaseGridSize.
std::vector<UnimodularDiagonal> enumerate_phase_diagonals(std::size_t n, int q,
                                                          bool quotient);

// The quotient alphabet searched by the bound engines: sign diagonals for
// real-field semantics, the q-grid otherwise.
std::vector<UnimodularDiagonal> search_alphabet(std::size_t n, int q,
                                                bool complex_semantics);

// terminal:     A D1 A D2 ... A Dk   (k factors of A; identity for k = 0)
// non-terminal: A D1 A ... A Dk A    (k + 1 factors of A)
Matrix word_product(const Matrix& a, const DiagonalWord& word, bool terminal);

}  // namespace absnorm

#endif  // ABSNORM_DIAGONAL_HPP
