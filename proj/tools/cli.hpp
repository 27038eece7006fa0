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

#ifndef QDC_TOOLS_CLI_HPP
#define QDC_TOOLS_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/channel_spec.hpp"
#include "qdc/protocol.hpp"

namespace qdc::cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or statistical failure
inline constexpr int kExitUsage = 2;    // usage or configuration error

enum class OutputFormat { kTable, kJson, kCsv };

struct CliConfig {
  std::string subcommand;
  std::string d;       // "3", or "2..5" for verify
  std::string coeffs;  // comma separated; last entry may be "auto"
  bool sort = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::string policy = "uniform";  // uniform | fixed
  std::string messages;            // fixed policy: "m:t:n,..." one per branch
  OutputFormat format = OutputFormat::kTable;
  std::string out;  // empty: stdout
  std::size_t threads = 1;
  std::size_t branch = 0;
  std::string dump = "states";  // basis: states | alice | usim
  std::string inject_fault;     // verify: "" | negated-phase
};

/// Coefficients from "x0,x1,...[,auto]". "auto" completes the last entry to
/// sqrt(1 - sum of the others squared) and fails with a normalization
/// SpecError when that sum exceeds 1 + 1e-10. With `sort`, the resolved list
/// is sorted ascending. Throws SpecError or RangeError.
std::vector<double> resolve_coeffs(std::string_view text, bool sort);

/// The spec named by --d/--coeffs; uniform when no coefficients are given.
ChannelSpec resolve_spec(const CliConfig& config);

/// Inclusive d range from "3" or "2..5".
std::pair<std::size_t, std::size_t> parse_d_range(std::string_view text);

int cmd_info(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_basis(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Never throws; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qdc::cli

#endif  // QDC_TOOLS_CLI_HPP
