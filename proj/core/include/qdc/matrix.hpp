// Copyright 2026 The qdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDC_MATRIX_HPP
#define QDC_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qdc {

using Complex = std::complex<double>;

/// Tolerance of the unitarity contract, max |U^dagger U - I| entrywise.
inline constexpr double kUnitarityTol = 1e-12;
/// Tolerance of the normalization contract on state vectors.
inline constexpr double kNormTol = 1e-10;

/// Dense square complex matrix, row-major. Column j is the image of basis
/// label j.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static Matrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::vector<Complex> column(std::size_t col) const;

  Matrix adjoint() const;
  Matrix& operator*=(Complex scale);

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Largest entrywise modulus of lhs - rhs. Dimensions must agree.
double max_abs_diff(const Matrix& lhs, const Matrix& rhs);

/// max |M^dagger M - I| over all entries.
double unitarity_error(const Matrix& m);

/// A matrix known to satisfy the unitarity contract. Construction checks it.
class UnitaryMatrix {
 public:
  /// Throws NotUnitaryError when unitarity_error(m) > tol.
  explicit UnitaryMatrix(Matrix m, double tol = kUnitarityTol);

  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return m_.dim(); }
  const Complex& operator()(std::size_t row, std::size_t col) const { return m_(row, col); }
  const Matrix& matrix() const noexcept { return m_; }
  std::vector<Complex> column(std::size_t col) const { return m_.column(col); }

  UnitaryMatrix adjoint() const;

  friend UnitaryMatrix operator*(const UnitaryMatrix& lhs, const UnitaryMatrix& rhs);
  friend bool operator==(const UnitaryMatrix&, const UnitaryMatrix&) = default;

 private:
  struct Trusted {};
  UnitaryMatrix(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

/// A prescribed column of a matrix under construction.
struct FixedColumn {
  std::size_t index;
  std::vector<Complex> values;
};

/// Builds a unitary whose listed columns are exactly `fixed` and whose other
/// columns are filled, in ascending column order, by Gram-Schmidt over the
/// canonical basis vectors e_0, e_1, ... taken in order. The result is a pure
/// function of the inputs. Fixed columns must be orthonormal within 1e-12.
UnitaryMatrix complete_to_unitary(std::size_t dim, std::span<const FixedColumn> fixed);

/// Row-major dump: one line per row, each row a JSON-style list of
/// [re, im] pairs printed with 17 significant digits.
std::string format_matrix(const Matrix& m);

}  // namespace qdc

#endif  // QDC_MATRIX_HPP
