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

#include "absnorm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "absnorm/error.hpp"

namespace absnorm {

const char* to_string(Field field) noexcept {
  return field == Field::real ? "real" : "complex";
}

const char* to_string(NormExponent p) noexcept {
  switch (p) {
    case NormExponent::one:
      return "1";
    case NormExponent::two:
      return "2";
    case NormExponent::inf:
      return "inf";
  }
  return "?";
}

Matrix::Matrix(std::size_t n, Field field)
    : n_(n), field_(field), data_(n * n, Scalar(0.0, 0.0)) {
  if (n == 0) throw DimensionError("matrix dimension must be positive");
}

Matrix Matrix::zeros(std::size_t n, Field field) { return Matrix(n, field); }

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

Matrix Matrix::real(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<Scalar>> converted;
  for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
  return from_rows(converted, Field::real);
}

Matrix Matrix::complex(
    std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> converted;
  for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
  return from_rows(converted, Field::complex);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         Field field) {
  const std::size_t n = rows.size();
  if (n == 0) throw DimensionError("matrix has no rows");
  Matrix m(n, field);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw DimensionError("row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw InputError("matrix entries must be finite");
  }
  if (field_ == Field::real && value.imag() != 0.0) {
    throw InputError("real matrix cannot hold a nonzero imaginary part");
  }
  data_[i * n_ + j] = value;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

Field common_field(Field a, Field b) noexcept {
  return (a == Field::complex || b == Field::complex) ? Field::complex
                                                      : Field::real;
}

void multiply(const Matrix& a, const Matrix& b, Matrix& out) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("matrix product dimension mismatch");
  if (out.size() != n || out.field() != common_field(a.field(), b.field())) {
    out = Matrix(n, common_field(a.field(), b.field()));
  }
  const auto ad = a.data();
  const auto bd = b.data();
  auto od = out.mutable_data();
  for (std::size_t i = 0; i < n; ++i) {
    Scalar* orow = od.data() + i * n;
    std::fill(orow, orow + n, Scalar(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar aik = ad[i * n + k];
      if (aik == Scalar(0.0, 0.0)) continue;
      const Scalar* brow = bd.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) orow[j] += aik * brow[j];
    }
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix out;
  multiply(a, b, out);
  return out;
}

Vector operator*(const Matrix& a, std::span<const Scalar> x) {
  const std::size_t n = a.size();
  if (x.size() != n) throw DimensionError("matrix-vector dimension mismatch");
  Vector y(n);
  const auto ad = a.data();
  for (std::size_t i = 0; i < n; ++i) {
    Scalar s(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) s += ad[i * n + j] * x[j];
    y[i] = s;
  }
  return y;
}

namespace {

Field field_of(std::span<const Scalar> d) {
  for (const auto& v : d) {
    if (v.imag() != 0.0) return Field::complex;
  }
  return Field::real;
}

}  // namespace

void scale_columns(const Matrix& a, std::span<const Scalar> d, Matrix& out) {
  const std::size_t n = a.size();
  if (d.size() != n) throw DimensionError("diagonal dimension mismatch");
  const Field field = common_field(a.field(), field_of(d));
  if (out.size() != n || out.field() != field) out = Matrix(n, field);
  const auto ad = a.data();
  auto od = out.mutable_data();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) od[i * n + j] = ad[i * n + j] * d[j];
  }
}

Matrix scale_columns(const Matrix& a, std::span<const Scalar> d) {
  Matrix out;
  scale_columns(a, d, out);
  return out;
}

Matrix scale_rows(std::span<const Scalar> d, const Matrix& a) {
  const std::size_t n = a.size();
  if (d.size() != n) throw DimensionError("diagonal dimension mismatch");
  Matrix out(n, common_field(a.field(), field_of(d)));
  const auto ad = a.data();
  auto od = out.mutable_data();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) od[i * n + j] = d[i] * ad[i * n + j];
  }
  return out;
}

Matrix power(const Matrix& a, unsigned k) {
  Matrix result = Matrix::identity(a.size(), a.field());
  Matrix base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Matrix entrywise_abs(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix out(n, Field::real);
  const auto ad = a.data();
  auto od = out.mutable_data();
  for (std::size_t i = 0; i < n * n; ++i) od[i] = std::abs(ad[i]);
  return out;
}

WeightedLpNorm::WeightedLpNorm(std::vector<double> w, NormExponent exponent)
    : weights(std::move(w)), p(exponent) {
  if (weights.empty()) throw DimensionError("norm weights must be nonempty");
  for (double wi : weights) {
    if (!(wi > 0.0) || !std::isfinite(wi)) {
      throw InputError("norm weights must be finite and positive");
    }
  }
}

WeightedLpNorm WeightedLpNorm::unit(std::size_t n, NormExponent exponent) {
  return WeightedLpNorm(std::vector<double>(n, 1.0), exponent);
}

double vector_norm(std::span<const Scalar> x, const WeightedLpNorm& norm) {
  if (x.size() != norm.size()) {
    throw DimensionError("vector and norm dimension mismatch");
  }
  double acc = 0.0;
  switch (norm.p) {
    case NormExponent::one:
      for (std::size_t i = 0; i < x.size(); ++i) {
        acc += norm.weights[i] * std::abs(x[i]);
      }
      return acc;
    case NormExponent::two: {
      // scaled sum of squares
      double scale = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        scale = std::max(scale, norm.weights[i] * std::abs(x[i]));
      }
      if (scale == 0.0) return 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = norm.weights[i] * std::abs(x[i]) / scale;
        acc += t * t;
      }
      return scale * std::sqrt(acc);
    }
    case NormExponent::inf:
      for (std::size_t i = 0; i < x.size(); ++i) {
        acc = std::max(acc, norm.weights[i] * std::abs(x[i]));
      }
      return acc;
  }
  return acc;
}

double induced_norm(const Matrix& a, const WeightedLpNorm& norm) {
  const std::size_t n = a.size();
  if (norm.size() != n) {
    throw DimensionError("matrix and norm dimension mismatch");
  }
  const auto& w = norm.weights;
  Matrix m(n, a.field());
  {
    auto md = m.mutable_data();
    const auto ad = a.data();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        md[i * n + j] = ad[i * n + j] * (w[i] / w[j]);
      }
    }
  }
  const auto md = m.data();
  double best = 0.0;
  switch (norm.p) {
    case NormExponent::one:
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::abs(md[i * n + j]);
        best = std::max(best, s);
      }
      return best;
    case NormExponent::inf:
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += std::abs(md[i * n + j]);
        best = std::max(best, s);
      }
      return best;
    case NormExponent::two:
      return spectral_norm(m);
  }
  return best;
}

}  // namespace absnorm
