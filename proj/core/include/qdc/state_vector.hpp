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

#ifndef QDC_STATE_VECTOR_HPP
#define QDC_STATE_VECTOR_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/matrix.hpp"
#include "qdc/rng.hpp"

namespace qdc {

/// Complex amplitudes over a tensor product of qudit registers.
///
/// Basis labels are big-endian: the first register is the most significant
/// digit, so for dims (3, 3, 3) the label of |abc> is 9a + 3b + c. Every
/// register has dimension >= 2 and amps().size() equals the product of dims.
class StateVector {
 public:
  StateVector() = default;
  /// Throws DimensionError on shape violations.
  StateVector(std::vector<std::size_t> dims, std::vector<Complex> amps);

  /// Computational basis state with the given per-register digits.
  static StateVector ket(std::vector<std::size_t> dims, std::span<const std::size_t> digits);
  /// Convenience for equal-dimension registers: ket(3, {0, 1, 0}) is |010>.
  static StateVector ket(std::size_t d, std::initializer_list<std::size_t> digits);
  static StateVector zero(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t registers() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const Complex> amps() const noexcept { return amps_; }

  const Complex& operator[](std::size_t label) const { return amps_[label]; }
  Complex amplitude(std::initializer_list<std::size_t> digits) const;

  std::size_t label_of(std::span<const std::size_t> digits) const;
  std::vector<std::size_t> digits_of(std::size_t label) const;

  double norm() const;
  bool is_normalized(double tol = kNormTol) const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Complex> amps_;
};

/// a (x) b: dims concatenate and the amplitude of label (i, j) is a[i] * b[j].
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// Applies `u` to the registers listed in `targets` (in that order, first
/// target most significant) and the identity elsewhere.
///
/// Throws DimensionError when u.dim() differs from the product of the target
/// dimensions, or when a target is duplicated or out of range.
StateVector apply_unitary(const UnitaryMatrix& u, const StateVector& s,
                          std::span<const std::size_t> targets);
StateVector apply_unitary(const UnitaryMatrix& u, const StateVector& s,
                          std::initializer_list<std::size_t> targets);

/// <a|b>, conjugate-linear in a. Throws DimensionError when dims differ.
Complex inner_product(const StateVector& a, const StateVector& b);

/// Largest entrywise modulus of a - b. Throws DimensionError when dims differ.
double max_abs_diff(const StateVector& a, const StateVector& b);

/// Probability of each outcome when measuring register `target`.
std::vector<double> register_distribution(const StateVector& s, std::size_t target);

struct MeasurementOutcome {
  std::size_t index;
  double probability;
  StateVector post_state;
};

/// Projective measurement of one register in the computational basis.
///
/// Outcome k is drawn with probability sum |amp|^2 over labels whose target
/// digit is k, using one uniform draw from `rng`. The post-measurement state
/// keeps only those labels and is renormalized. Throws MeasurementError on a
/// zero-norm input.
MeasurementOutcome measure_register(const StateVector& s, std::size_t target, Rng& rng);

/// Amplitudes with register `target` fixed to `value`, that register removed.
/// Renormalized unless the slice is zero.
StateVector slice_register(const StateVector& s, std::size_t target, std::size_t value);

struct Projection {
  std::size_t index;
  double overlap;  // |<basis_index|s>|
};

/// The basis element maximizing |<basis_i|s>|; ties go to the lower index.
/// Throws DimensionError on an empty basis. Never rejects the overlap.
Projection best_overlap(const StateVector& s, std::span<const StateVector> basis);

/// Measurement in an orthonormal basis for a state expected to be one of the
/// basis elements. Throws DecodeError with a diagnostic when the best overlap
/// is below 1 - 1e-6, i.e. the state lies outside the family.
Projection project_onto_basis(const StateVector& s, std::span<const StateVector> basis);

inline constexpr double kMembershipTol = 1e-6;

/// max |G - I| over the Gram matrix of `states`, brute force over all pairs.
double orthonormality_error(std::span<const StateVector> states);

/// Text record {"dims":[...],"amps":[[re,im],...]} with 17 significant digits.
std::string serialize_state(const StateVector& s);
/// Inverse of serialize_state. Throws ParseError on malformed input.
StateVector parse_state(std::string_view record);

}  // namespace qdc

#endif  // QDC_STATE_VECTOR_HPP
