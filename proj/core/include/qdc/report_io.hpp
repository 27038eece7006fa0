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

#ifndef QDC_REPORT_IO_HPP
#define QDC_REPORT_IO_HPP

#include <string>
#include <string_view>

#include "qdc/batch_stats.hpp"
#include "qdc/info.hpp"
#include "qdc/protocol.hpp"

namespace qdc {

// JSON documents carry doubles at full round-trip precision; non-finite
// values are written as the strings "inf", "-inf" and "nan". Every *_from_json
// throws ParseError on malformed input, and parse(emit(x)) == x.

/// {d, coeffs[], p[], capacity_bits[], i_aver_bits, overhead_bits,
///  empirical?: {trials, freq[], bits_per_run}}
std::string to_json(const InfoReport& report);
InfoReport info_report_from_json(std::string_view text);

/// {d, coeffs[], trials, base_seed, branch_counts[], branch_failures[],
///  failures, freq[], bits_per_run}. Per-trial records are not included.
std::string to_json(const BatchStats& stats);
BatchStats batch_stats_from_json(std::string_view text);

/// {z_scores[], bits_gap, bits_stderr, pass}
std::string to_json(const ComparisonVerdict& verdict);
ComparisonVerdict verdict_from_json(std::string_view text);

/// One line per event: {"step": i, "name": ..., "payload": {...}}. The
/// Prepared payload carries the spec and seed, the Decoded payload the outcome.
std::string trace_to_jsonl(const ProtocolTrace& trace);

}  // namespace qdc

#endif  // QDC_REPORT_IO_HPP
