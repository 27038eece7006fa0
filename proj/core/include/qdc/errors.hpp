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

#ifndef QDC_ERRORS_HPP
#define QDC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: wrong amplitude count, mismatched dims, bad register targets.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operator or message label outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A matrix handed to UnitaryMatrix that fails U^dagger U = I.
class NotUnitaryError : public Error {
 public:
  using Error::Error;
};

/// Measurement of a zero-norm state.
class MeasurementError : public Error {
 public:
  using Error::Error;
};

/// A state whose best overlap with a decoding basis is below the acceptance
/// threshold, i.e. it is not a member of the encoded family.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t best_index, double best_overlap)
      : Error(what), best_index_(best_index), best_overlap_(best_overlap) {}

  std::size_t best_index() const noexcept { return best_index_; }
  double best_overlap() const noexcept { return best_overlap_; }

 private:
  std::size_t best_index_;
  double best_overlap_;
};

/// Inputs that were produced from different channel specs.
class SpecMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (state records, JSON reports).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdc

#endif  // QDC_ERRORS_HPP
