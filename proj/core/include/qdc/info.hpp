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

#ifndef QDC_INFO_HPP
#define QDC_INFO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qdc/batch_stats.hpp"
#include "qdc/channel_spec.hpp"

namespace qdc {

/// p_k = (d - k)(x_k^2 - x_{k-1}^2) with x_{-1} = 0.
std::vector<double> branch_probabilities(const ChannelSpec& spec);

/// log2(d^2 (d - k)): bits carried by one decoded message in branch k.
double branch_capacity_bits(std::size_t d, std::size_t k);

/// sum_k p_k log2(d^2 (d - k)) bits. Zero-probability branches add nothing.
double average_information(const ChannelSpec& spec);

/// 2 log2(d) bits: the cost of broadcasting Alice's ancilla outcome. Reported
/// alongside the average information, never subtracted from it.
double classical_overhead(std::size_t d);

struct EmpiricalSection {
  std::uint64_t trials = 0;
  std::vector<double> freq;
  double bits_per_run = 0.0;

  friend bool operator==(const EmpiricalSection&, const EmpiricalSection&) = default;
};

struct InfoReport {
  std::size_t d = 0;
  std::vector<double> coeffs;
  std::vector<double> p;
  std::vector<double> capacity_bits;
  double i_aver_bits = 0.0;
  double overhead_bits = 0.0;
  std::optional<EmpiricalSection> empirical;

  /// p_k * capacity_k, the per-branch terms of i_aver_bits.
  std::vector<double> contributions() const;

  friend bool operator==(const InfoReport&, const InfoReport&) = default;
};

InfoReport make_info_report(const ChannelSpec& spec);
/// Attaches the empirical section taken from `stats`.
InfoReport with_empirical(InfoReport report, const BatchStats& stats);

struct ComparisonVerdict {
  std::vector<double> z_scores;  // per branch, binomial standard error
  double bits_gap = 0.0;         // empirical bits/run - i_aver_bits
  double bits_stderr = 0.0;      // sample standard error of the bits/run mean
  bool pass = false;

  friend bool operator==(const ComparisonVerdict&, const ComparisonVerdict&) = default;
};

/// Passing needs every |z| <= 5 and |bits_gap| <= 5 bits_stderr.
inline constexpr double kVerdictSigmas = 5.0;
/// Absolute slack on bits_gap for batches whose standard error is zero
/// (every trial lands in one branch) but whose p_k carry rounding.
inline constexpr double kBitsGapFloor = 1e-9;

/// Monte Carlo batch against the closed form. A branch whose observed
/// frequency matches p_k within 1e-10 scores z = 0. Throws RangeError on
/// zero-trial stats and SpecMismatchError when the stats come from another spec.
ComparisonVerdict compare_empirical(const InfoReport& report, const BatchStats& stats);

}  // namespace qdc

#endif  // QDC_INFO_HPP
