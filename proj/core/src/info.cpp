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

#include "qdc/info.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qdc/errors.hpp"

namespace qdc {

std::vector<double> BatchStats::frequencies() const {
  std::vector<double> freq(branch_counts.size(), 0.0);
  if (trials == 0) return freq;
  for (std::size_t k = 0; k < freq.size(); ++k)
    freq[k] = static_cast<double>(branch_counts[k]) / static_cast<double>(trials);
  return freq;
}

std::vector<double> branch_probabilities(const ChannelSpec& spec) {
  const std::size_t d = spec.d();
  const auto x = spec.coeffs();
  std::vector<double> p(d);
  double prev = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double sq = x[k] * x[k];
    p[k] = static_cast<double>(d - k) * (sq - prev);
    prev = sq;
  }
  return p;
}

double branch_capacity_bits(std::size_t d, std::size_t k) {
  if (k >= d) throw RangeError("branch index out of range");
  return std::log2(static_cast<double>(d * d * (d - k)));
}

double average_information(const ChannelSpec& spec) {
  const auto p = branch_probabilities(spec);
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0.0) continue;
    total += p[k] * branch_capacity_bits(spec.d(), k);
  }
  return total;
}

double classical_overhead(std::size_t d) {
  if (d < 2) throw RangeError("classical_overhead needs d >= 2");
  return 2.0 * std::log2(static_cast<double>(d));
}

std::vector<double> InfoReport::contributions() const {
  std::vector<double> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = p[k] == 0.0 ? 0.0 : p[k] * capacity_bits[k];
  return out;
}

InfoReport make_info_report(const ChannelSpec& spec) {
  InfoReport report;
  report.d = spec.d();
  report.coeffs.assign(spec.coeffs().begin(), spec.coeffs().end());
  report.p = branch_probabilities(spec);
  report.capacity_bits.resize(spec.d());
  for (std::size_t k = 0; k < spec.d(); ++k)
    report.capacity_bits[k] = branch_capacity_bits(spec.d(), k);
  report.i_aver_bits = average_information(spec);
  report.overhead_bits = classical_overhead(spec.d());
  return report;
}

namespace {

void require_matching(const InfoReport& report, const BatchStats& stats) {
  if (stats.trials == 0) throw RangeError("empirical comparison needs at least one trial");
  if (stats.d != report.d || stats.coeffs != report.coeffs ||
      stats.branch_counts.size() != report.d)
    throw SpecMismatchError("batch statistics were produced from a different channel spec");
}

}  // namespace

InfoReport with_empirical(InfoReport report, const BatchStats& stats) {
  require_matching(report, stats);
  report.empirical = EmpiricalSection{stats.trials, stats.frequencies(), stats.bits_per_run};
  return report;
}

ComparisonVerdict compare_empirical(const InfoReport& report, const BatchStats& stats) {
  require_matching(report, stats);
  const double n = static_cast<double>(stats.trials);
  const auto freq = stats.frequencies();

  ComparisonVerdict verdict;
  verdict.pass = true;
  verdict.z_scores.resize(report.d);
  for (std::size_t k = 0; k < report.d; ++k) {
    const double p = report.p[k];
    const double diff = freq[k] - p;
    double z = 0.0;
    if (std::abs(diff) > kNormTol) {
      const double se = std::sqrt(p * (1.0 - p) / n);
      z = se > 0.0 ? diff / se : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    verdict.z_scores[k] = z;
    if (!(std::abs(z) <= kVerdictSigmas)) verdict.pass = false;
  }

  // Per-run bits take the value capacity_k on a decoded branch-k trial and 0
  // on a failure, so the sample variance follows from the counts.
  const double mean = stats.bits_per_run;
  double ss = 0.0;
  for (std::size_t k = 0; k < report.d; ++k) {
    const double ok = static_cast<double>(stats.branch_counts[k] - stats.branch_failures[k]);
    const double dev = report.capacity_bits[k] - mean;
    ss += ok * dev * dev;
  }
  ss += static_cast<double>(stats.failures) * mean * mean;
  const double var = stats.trials > 1 ? ss / (n - 1.0) : 0.0;
  verdict.bits_stderr = std::sqrt(var / n);
  verdict.bits_gap = stats.bits_per_run - report.i_aver_bits;
  if (!(std::abs(verdict.bits_gap) <= kVerdictSigmas * verdict.bits_stderr + kBitsGapFloor))
    verdict.pass = false;
  return verdict;
}

}  // namespace qdc
