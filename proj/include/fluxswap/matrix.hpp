// Copyright 2026 The fluxswap Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fluxswap {

using Complex = std::complex<double>;

/// Raised when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by spectral routines when the input is not Hermitian.
class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense complex matrix, row-major. Column vectors are n x 1 matrices.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
  /// Column vector from entries.
  static ComplexMatrix column(std::vector<Complex> entries);
  /// |v><w| for column vectors v, w.
  static ComplexMatrix outer(const ComplexMatrix& v, const ComplexMatrix& w);
  static ComplexMatrix projector(const ComplexMatrix& v) { return outer(v, v); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_column() const noexcept { return cols_ == 1; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Flat row-major access.
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }
  std::span<Complex> entries() noexcept { return data_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  /// max |M - M^dagger|, entrywise.
  double hermiticity_error() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
/// Matrix product; dispatches to the parallel kernel for large operands.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// A B - B A
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// <v|w> for column vectors.
Complex inner(const ComplexMatrix& v, const ComplexMatrix& w);
/// Frobenius norm of a - b.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ordered subsystem dimensions of a tensor-product space.
struct DimSpec {
  std::vector<std::size_t> dims;

  DimSpec() = default;
  DimSpec(std::initializer_list<std::size_t> d) : dims(d) {}
  explicit DimSpec(std::vector<std::size_t> d) : dims(std::move(d)) {}

  std::size_t count() const noexcept { return dims.size(); }
  std::size_t total() const noexcept;
  std::size_t operator[](std::size_t i) const { return dims.at(i); }
  /// Throws DimensionError unless every dim is positive and the product equals n.
  void check(std::size_t n, const char* what) const;

  friend bool operator==(const DimSpec&, const DimSpec&) = default;
};

std::string to_string(const DimSpec& d);

}  // namespace fluxswap
