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

#ifndef QDC_VERIFY_HPP
#define QDC_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qdc/matrix.hpp"

namespace qdc {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string counterexample;  // first failure, empty on pass
};

using WeylFactory = std::function<UnitaryMatrix(std::size_t, std::size_t, std::size_t)>;

struct VerifyOptions {
  /// Weyl factory under test; swapped for a mutant in sanity checks.
  WeylFactory weyl;
  std::uint64_t seed = 20260101;
  std::size_t random_specs = 16;
};

/// Runs, for one dimension d in [2, 8], the suites
///   unitarity, weyl-composition, "<n>-basis orthonormal (branch k)" for
///   every branch, usim-columns, round-trip
/// in that order. Every suite runs even after an earlier failure.
std::vector<SuiteResult> run_verification(std::size_t d, const VerifyOptions& options = {});

/// Mutant Weyl factory with the phase conjugated (w -> w^-1).
UnitaryMatrix weyl_negated_phase(std::size_t d, std::size_t shift, std::size_t phase);

}  // namespace qdc

#endif  // QDC_VERIFY_HPP
