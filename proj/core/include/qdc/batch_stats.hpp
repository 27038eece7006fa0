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

#ifndef QDC_BATCH_STATS_HPP
#define QDC_BATCH_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdc/operators.hpp"

namespace qdc {

/// One row of a batch: which branch fired, what was sent, whether it decoded.
struct TrialRecord {
  std::uint64_t trial = 0;
  std::size_t branch = 0;
  MessageLabel sent;
  bool decoded_ok = false;
  double bits = 0.0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Aggregate of run_batch. Every field is built from integer counts, so it
/// does not depend on how trials were scheduled.
struct BatchStats {
  std::size_t d = 0;
  std::vector<double> coeffs;
  std::uint64_t trials = 0;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> branch_counts;    // per branch k
  std::vector<std::uint64_t> branch_failures;  // decode failures per branch
  std::uint64_t failures = 0;
  double bits_per_run = 0.0;
  std::vector<TrialRecord> records;  // filled only on request

  std::vector<double> frequencies() const;

  friend bool operator==(const BatchStats&, const BatchStats&) = default;
};

}  // namespace qdc

#endif  // QDC_BATCH_STATS_HPP
