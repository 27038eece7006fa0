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

#include "qdc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format.hpp"
#include "qdc/errors.hpp"

namespace qdc {

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<Complex> Matrix::column(std::size_t col) const {
  if (col >= dim_) throw DimensionError("column index out of range");
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, col);
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Matrix& Matrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("matrix product: dimension mismatch");
  const std::size_t n = lhs.dim();
  Matrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double max_abs_diff(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  auto a = lhs.entries();
  auto b = rhs.entries();
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double unitarity_error(const Matrix& m) {
  const std::size_t n = m.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t r = 0; r < n; ++r) acc += std::conj(m(r, i)) * m(r, j);
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

UnitaryMatrix::UnitaryMatrix(Matrix m, double tol) : m_(std::move(m)) {
  const double err = unitarity_error(m_);
  if (!(err <= tol)) {
    throw NotUnitaryError("matrix is not unitary: max |U^dagger U - I| = " +
                          detail::format17(err));
  }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  return UnitaryMatrix(Matrix::identity(dim), Trusted{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint(), Trusted{}); }

UnitaryMatrix operator*(const UnitaryMatrix& lhs, const UnitaryMatrix& rhs) {
  return UnitaryMatrix(lhs.m_ * rhs.m_);
}

namespace {

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(std::span<const Complex> v) { return std::sqrt(std::abs(dot(v, v))); }

// Two passes of classical Gram-Schmidt against the accepted columns.
void orthogonalize(std::vector<Complex>& v, const std::vector<std::vector<Complex>>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) {
      const Complex c = dot(q, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * q[i];
    }
  }
}

}  // namespace

UnitaryMatrix complete_to_unitary(std::size_t dim, std::span<const FixedColumn> fixed) {
  // Candidates whose residual drops below this are treated as already spanned.
  constexpr double kAcceptResidual = 1e-6;

  std::vector<bool> taken(dim, false);
  std::vector<std::vector<Complex>> accepted;
  Matrix out(dim);

  for (const auto& col : fixed) {
    if (col.index >= dim || col.values.size() != dim)
      throw DimensionError("complete_to_unitary: fixed column shape mismatch");
    if (taken[col.index]) throw DimensionError("complete_to_unitary: duplicate fixed column");
    if (std::abs(norm(col.values) - 1.0) > kUnitarityTol)
      throw NotUnitaryError("complete_to_unitary: fixed column is not unit norm");
    for (const auto& q : accepted) {
      if (std::abs(dot(q, col.values)) > kUnitarityTol)
        throw NotUnitaryError("complete_to_unitary: fixed columns are not orthogonal");
    }
    taken[col.index] = true;
    accepted.push_back(col.values);
    for (std::size_t r = 0; r < dim; ++r) out(r, col.index) = col.values[r];
  }

  std::size_t candidate = 0;
  for (std::size_t slot = 0; slot < dim; ++slot) {
    if (taken[slot]) continue;
    bool placed = false;
    while (!placed && candidate < dim) {
      std::vector<Complex> v(dim);
      v[candidate++] = 1.0;
      orthogonalize(v, accepted);
      const double len = norm(v);
      if (len <= kAcceptResidual) continue;
      for (auto& z : v) z /= len;
      for (std::size_t r = 0; r < dim; ++r) out(r, slot) = v[r];
      accepted.push_back(std::move(v));
      placed = true;
    }
    if (!placed) throw NotUnitaryError("complete_to_unitary: ran out of completion candidates");
  }
  return UnitaryMatrix(std::move(out));
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    out += '[';
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) out += ',';
      detail::append_pair(out, m(r, c));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace qdc
