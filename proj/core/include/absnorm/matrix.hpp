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

#ifndef ABSNORM_MATRIX_HPP
#define ABSNORM_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace absnorm {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;

enum class Field { real, complex };

const char* to_string(Field field) noexcept;

// Dense square matrix over R or C, row-major.
//
// Entries are stored as complex pairs for both fields; a real matrix is one
// whose field tag is `real`, and every mutation keeps its imaginary parts at
// exactly zero. Dimension 0 is not a valid matrix; constructors reject it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t n, Field field);

  static Matrix zeros(std::size_t n, Field field = Field::real);
  static Matrix identity(std::size_t n, Field field = Field::real);
  static Matrix real(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix complex(
      std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          Field field);

  std::size_t size() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  bool is_real() const noexcept { return field_ == Field::real; }

  Scalar operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  // Throws InputError when a nonzero imaginary part is written into a real
  // matrix or the value is not finite.
  void set(std::size_t i, std::size_t j, Scalar value);

  std::span<const Scalar> data() const noexcept { return data_; }
  // Raw mutable storage for kernels that preserve the field invariant.
  std::span<Scalar> mutable_data() noexcept { return data_; }

  double max_abs() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t n_ = 0;
  Field field_ = Field::real;
  std::vector<Scalar> data_;
};

Field common_field(Field a, Field b) noexcept;

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const Scalar> x);

// out = a * b without allocating when `out` already has the right shape.
void multiply(const Matrix& a, const Matrix& b, Matrix& out);

// a * diag(d) and diag(d) * a.
Matrix scale_columns(const Matrix& a, std::span<const Scalar> d);
Matrix scale_rows(std::span<const Scalar> d, const Matrix& a);
// out = a * diag(d), reusing out's storage when the shape allows.
void scale_columns(const Matrix& a, std::span<const Scalar> d, Matrix& out);

Matrix power(const Matrix& a, unsigned k);

// |A| = [|a_ij|], always real.
Matrix entrywise_abs(const Matrix& a);

// All eigenvalues, via Householder reduction to Hessenberg form followed by
// Wilkinson-shifted complex QR with deflation. Order is unspecified.
Vector eigenvalues(const Matrix& a);

// max |lambda| over the eigenvalues of A.
double spectral_radius(const Matrix& a);

// Largest singular value, by one-sided Jacobi.
double spectral_norm(const Matrix& a);

enum class NormExponent { one, two, inf };

const char* to_string(NormExponent p) noexcept;

// The absolute norm x -> ||W x||_p with W = diag(weights), weights > 0.
struct WeightedLpNorm {
  std::vector<double> weights;
  NormExponent p = NormExponent::one;

  WeightedLpNorm() = default;
  WeightedLpNorm(std::vector<double> w, NormExponent exponent);

  static WeightedLpNorm unit(std::size_t n, NormExponent exponent);

  std::size_t size() const noexcept { return weights.size(); }
};

double vector_norm(std::span<const Scalar> x, const WeightedLpNorm& norm);

// Operator norm of A induced by `norm`: ||W A W^-1||_p, exact for every
// supported exponent (column sums, row sums, spectral norm).
double induced_norm(const Matrix& a, const WeightedLpNorm& norm);

}  // namespace absnorm

#endif  // ABSNORM_MATRIX_HPP
