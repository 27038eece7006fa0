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

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "qdc/errors.hpp"
#include "qdc/info.hpp"
#include "qdc/matrix.hpp"
#include "qdc/operators.hpp"
#include "qdc/report_io.hpp"
#include "qdc/state_vector.hpp"
#include "qdc/verify.hpp"

namespace qdc::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view token, const char* what) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw RangeError(std::string("cannot parse ") + what + " '" + std::string(token) + "'");
  return value;
}

std::size_t parse_single_d(std::string_view text) {
  return parse_number<std::size_t>(trim(text), "dimension");
}

// Table values: 6 significant digits. Machine formats: 17.
std::string g6(double x) { return fmt::format("{:.6g}", x); }
std::string g17(double x) { return fmt::format("{:.17g}", x); }

void emit(const CliConfig& config, std::ostream& out, const std::string& text) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
  if (!file) throw RangeError("cannot open output file '" + config.out + "'");
  file << text;
}

MessagePolicy resolve_policy(const CliConfig& config, std::size_t d) {
  if (config.policy == "uniform") return UniformMessages{};
  if (config.policy != "fixed") throw RangeError("unknown message policy '" + config.policy + "'");
  FixedMessages fixed;
  if (config.messages.empty())
    throw RangeError("fixed policy needs --messages m:t:n,... with one entry per branch");
  for (auto entry : split(config.messages, ',')) {
    const auto parts = split(entry, ':');
    if (parts.size() != 3) throw RangeError("message '" + std::string(entry) + "' is not m:t:n");
    fixed.per_branch.push_back({parse_number<std::size_t>(parts[0], "message m"),
                                parse_number<std::size_t>(parts[1], "message t"),
                                parse_number<std::size_t>(parts[2], "message n")});
  }
  MessagePolicy policy = fixed;
  validate_policy(policy, d);
  return policy;
}

std::string coeff_list(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + g6(xs[i]);
  return s;
}

std::string info_table(const InfoReport& report) {
  std::string s = fmt::format("d = {}\ncoeffs = {}\n", report.d, coeff_list(report.coeffs));
  s += fmt::format("{:>6} {:>4} {:>14} {:>14} {:>18}\n", "branch", "r", "p_k",
                   "capacity_bits", "contribution_bits");
  const auto contrib = report.contributions();
  for (std::size_t k = 0; k < report.d; ++k) {
    s += fmt::format("{:>6} {:>4} {:>14} {:>14} {:>18}\n", k, report.d - k, g6(report.p[k]),
                     g6(report.capacity_bits[k]), g6(contrib[k]));
  }
  s += fmt::format("i_aver_bits = {}\n", g6(report.i_aver_bits));
  s += fmt::format("overhead_bits = {} (classical broadcast, not netted)\n",
                   g6(report.overhead_bits));
  if (report.empirical) {
    s += fmt::format("empirical: trials = {}, freq = {}, bits_per_run = {}\n",
                     report.empirical->trials, coeff_list(report.empirical->freq),
                     g6(report.empirical->bits_per_run));
  }
  return s;
}

std::string info_csv(const InfoReport& report) {
  std::string s = "branch,r,p,capacity_bits,contribution_bits\n";
  const auto contrib = report.contributions();
  for (std::size_t k = 0; k < report.d; ++k) {
    s += fmt::format("{},{},{},{},{}\n", k, report.d - k, g17(report.p[k]),
                     g17(report.capacity_bits[k]), g17(contrib[k]));
  }
  return s;
}

}  // namespace

std::vector<double> resolve_coeffs(std::string_view text, bool sort) {
  const auto tokens = split(text, ',');
  std::vector<double> xs;
  bool has_auto = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "auto") {
      if (i + 1 != tokens.size()) throw RangeError("'auto' is only allowed as the last coefficient");
      has_auto = true;
      break;
    }
    xs.push_back(parse_number<double>(tokens[i], "coefficient"));
  }
  if (has_auto) {
    double sum = 0.0;
    for (double x : xs) sum += x * x;
    if (sum > 1.0 + kNormTol) {
      throw SpecError(SpecViolation::kNormalization,
                      "cannot complete 'auto': the given coefficients already have sum of squares " +
                          g17(sum) + " > 1");
    }
    xs.push_back(std::sqrt(std::max(0.0, 1.0 - sum)));
  }
  if (sort) std::sort(xs.begin(), xs.end());
  return xs;
}

ChannelSpec resolve_spec(const CliConfig& config) {
  if (config.coeffs.empty()) {
    if (config.d.empty()) throw RangeError("--d or --coeffs is required");
    return ChannelSpec::uniform(parse_single_d(config.d));
  }
  auto xs = resolve_coeffs(config.coeffs, config.sort);
  const std::size_t d = config.d.empty() ? xs.size() : parse_single_d(config.d);
  return ChannelSpec(d, std::move(xs));
}

std::pair<std::size_t, std::size_t> parse_d_range(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto d = parse_single_d(text);
    return {d, d};
  }
  const auto lo = parse_single_d(text.substr(0, dots));
  const auto hi = parse_single_d(text.substr(dots + 2));
  if (lo > hi) throw RangeError("empty dimension range '" + std::string(text) + "'");
  return {lo, hi};
}

int cmd_info(const CliConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const auto report = make_info_report(resolve_spec(config));
  switch (config.format) {
    case OutputFormat::kJson:
      emit(config, out, to_json(report) + "\n");
      break;
    case OutputFormat::kCsv:
      emit(config, out, info_csv(report));
      break;
    case OutputFormat::kTable:
      emit(config, out, info_table(report));
      break;
  }
  return kExitOk;
}

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.trials == 0) throw RangeError("--trials must be at least 1");
  const auto spec = resolve_spec(config);
  const auto policy = resolve_policy(config, spec.d());
  BatchOptions options;
  options.threads = config.threads;
  options.keep_records = config.format == OutputFormat::kCsv;
  const auto stats = run_batch(spec, config.trials, config.seed, policy, options);
  const auto report = with_empirical(make_info_report(spec), stats);
  const auto verdict = compare_empirical(report, stats);

  switch (config.format) {
    case OutputFormat::kJson: {
      nlohmann::ordered_json doc;
      doc["report"] = nlohmann::ordered_json::parse(to_json(report));
      doc["stats"] = nlohmann::ordered_json::parse(to_json(stats));
      doc["verdict"] = nlohmann::ordered_json::parse(to_json(verdict));
      emit(config, out, doc.dump(2) + "\n");
      break;
    }
    case OutputFormat::kCsv: {
      std::string s = "trial,branch,m,t,n,decoded_ok,bits\n";
      for (const auto& r : stats.records) {
        s += fmt::format("{},{},{},{},{},{},{}\n", r.trial, r.branch, r.sent.m, r.sent.t, r.sent.n,
                         r.decoded_ok ? 1 : 0, g17(r.bits));
      }
      emit(config, out, s);
      break;
    }
    case OutputFormat::kTable: {
      std::string s = info_table(report);
      std::string z;
      for (std::size_t k = 0; k < verdict.z_scores.size(); ++k)
        z += (k ? ", " : "") + g6(verdict.z_scores[k]);
      s += fmt::format("failures = {}\nz_scores = {}\nbits_gap = {} (stderr {})\nverdict = {}\n",
                       stats.failures, z, g6(verdict.bits_gap), g6(verdict.bits_stderr),
                       verdict.pass ? "pass" : "FAIL");
      emit(config, out, s);
      break;
    }
  }
  if (!verdict.pass) {
    err << "statistical check failed: empirical statistics disagree with the closed form\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const auto [lo, hi] = parse_d_range(config.d.empty() ? "3" : config.d);
  if (lo < 2 || hi > 8) throw RangeError("verify supports d in [2, 8]");
  VerifyOptions options;
  if (config.inject_fault == "negated-phase") {
    options.weyl = weyl_negated_phase;
  } else if (!config.inject_fault.empty()) {
    throw RangeError("unknown fault '" + config.inject_fault + "'");
  }

  std::string s;
  bool all_pass = true;
  for (std::size_t d = lo; d <= hi; ++d) {
    for (const auto& suite : run_verification(d, options)) {
      all_pass = all_pass && suite.passed;
      s += fmt::format("{} d={} {} ({} checks)", suite.passed ? "PASS" : "FAIL", d, suite.name,
                       suite.checks);
      if (!suite.passed) s += ": " + suite.counterexample;
      s += '\n';
    }
  }
  s += all_pass ? "all suites passed\n" : "verification FAILED\n";
  emit(config, out, s);
  return all_pass ? kExitOk : kExitFailure;
}

int cmd_basis(const CliConfig& config, std::ostream& out, std::ostream& /*err*/) {
  if (config.d.empty()) throw RangeError("--d is required");
  const std::size_t d = parse_single_d(config.d);
  BranchLabel::make(d, config.branch);

  std::string s;
  if (config.dump == "states") {
    for (const auto& state : encoded_basis(d, config.branch)) s += serialize_state(state) + "\n";
  } else if (config.dump == "alice") {
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t t = 0; t < d - config.branch; ++t) {
        s += fmt::format("# alice_op d={} branch={} m={} t={}\n", d, config.branch, m, t);
        s += format_matrix(alice_op(d, config.branch, m, t).matrix());
      }
  } else if (config.dump == "usim") {
    s += format_matrix(build_usim(resolve_spec(config)).matrix());
  } else {
    throw RangeError("unknown --dump '" + config.dump + "' (states | alice | usim)");
  }
  emit(config, out, s);
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic dense coding through a three-qudit GHZ-class channel"};
  app.require_subcommand(1);
  CliConfig config;

  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::kTable}, {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", config.d, "Level count d (verify also takes a range such as 2..5)");
    sub->add_option("--coeffs", config.coeffs,
                    "Ascending coefficients x0,...,x{d-1}; the last may be 'auto'");
    sub->add_flag("--sort", config.sort, "Sort the coefficients ascending instead of rejecting");
    sub->add_option("--seed", config.seed, "Base seed");
    sub->add_option("--trials", config.trials, "Number of protocol runs");
    sub->add_option("--format", config.format, "table | json | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", config.out, "Write output to this file instead of stdout");
    sub->add_option("--threads", config.threads, "Worker threads; never changes results")
        ->check(CLI::PositiveNumber);
  };

  auto* info = app.add_subcommand("info", "Closed-form branch probabilities and average information");
  add_common(info);
  auto* run_cmd = app.add_subcommand("run", "Monte Carlo protocol batch checked against the closed form");
  add_common(run_cmd);
  run_cmd->add_option("--policy", config.policy, "uniform | fixed");
  run_cmd->add_option("--messages", config.messages, "Fixed policy: m:t:n per branch, comma separated");
  auto* verify = app.add_subcommand("verify", "Exhaustive invariant suites for d in [2, 8]");
  add_common(verify);
  verify->add_option("--inject-fault", config.inject_fault,
                     "Run the suites against a mutant operator (negated-phase)");
  auto* basis = app.add_subcommand("basis", "Dump an encoded basis or operator matrices");
  add_common(basis);
  basis->add_option("--branch", config.branch, "Branch index k");
  basis->add_option("--dump", config.dump, "states | alice | usim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(config, out, err);
    if (run_cmd->parsed()) return cmd_run(config, out, err);
    if (verify->parsed()) return cmd_verify(config, out, err);
    if (basis->parsed()) return cmd_basis(config, out, err);
  } catch (const SpecError& e) {
    err << "error: invalid coefficients (" << to_string(e.violation()) << "): " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qdc::cli
