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

#include "qdc/report_io.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

using Json = nlohmann::ordered_json;

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json numbers(const std::vector<double>& xs) {
  Json arr = Json::array();
  for (double x : xs) arr.push_back(number(x));
  return arr;
}

double read_number(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw ParseError("unexpected string where a number was expected: " + s);
  }
  return j.get<double>();
}

std::vector<double> read_numbers(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(read_number(x));
  return out;
}

template <typename Fn>
auto parse_with(std::string_view text, const char* what, Fn&& fn) {
  try {
    return fn(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json message_json(const MessageLabel& msg) { return Json{{"m", msg.m}, {"t", msg.t}, {"n", msg.n}}; }

}  // namespace

std::string to_json(const InfoReport& report) {
  Json j;
  j["d"] = report.d;
  j["coeffs"] = numbers(report.coeffs);
  j["p"] = numbers(report.p);
  j["capacity_bits"] = numbers(report.capacity_bits);
  j["i_aver_bits"] = number(report.i_aver_bits);
  j["overhead_bits"] = number(report.overhead_bits);
  if (report.empirical) {
    j["empirical"] = Json{{"trials", report.empirical->trials},
                          {"freq", numbers(report.empirical->freq)},
                          {"bits_per_run", number(report.empirical->bits_per_run)}};
  }
  return j.dump(2);
}

InfoReport info_report_from_json(std::string_view text) {
  return parse_with(text, "info report", [](const Json& j) {
    InfoReport r;
    r.d = j.at("d").get<std::size_t>();
    r.coeffs = read_numbers(j.at("coeffs"));
    r.p = read_numbers(j.at("p"));
    r.capacity_bits = read_numbers(j.at("capacity_bits"));
    r.i_aver_bits = read_number(j.at("i_aver_bits"));
    r.overhead_bits = read_number(j.at("overhead_bits"));
    if (j.contains("empirical")) {
      const auto& e = j.at("empirical");
      r.empirical = EmpiricalSection{e.at("trials").get<std::uint64_t>(),
                                     read_numbers(e.at("freq")),
                                     read_number(e.at("bits_per_run"))};
    }
    return r;
  });
}

std::string to_json(const BatchStats& stats) {
  Json j;
  j["d"] = stats.d;
  j["coeffs"] = numbers(stats.coeffs);
  j["trials"] = stats.trials;
  j["base_seed"] = stats.base_seed;
  j["branch_counts"] = stats.branch_counts;
  j["branch_failures"] = stats.branch_failures;
  j["failures"] = stats.failures;
  j["freq"] = numbers(stats.frequencies());
  j["bits_per_run"] = number(stats.bits_per_run);
  return j.dump(2);
}

BatchStats batch_stats_from_json(std::string_view text) {
  return parse_with(text, "batch stats", [](const Json& j) {
    BatchStats s;
    s.d = j.at("d").get<std::size_t>();
    s.coeffs = read_numbers(j.at("coeffs"));
    s.trials = j.at("trials").get<std::uint64_t>();
    s.base_seed = j.at("base_seed").get<std::uint64_t>();
    s.branch_counts = j.at("branch_counts").get<std::vector<std::uint64_t>>();
    s.branch_failures = j.at("branch_failures").get<std::vector<std::uint64_t>>();
    s.failures = j.at("failures").get<std::uint64_t>();
    s.bits_per_run = read_number(j.at("bits_per_run"));
    return s;
  });
}

std::string to_json(const ComparisonVerdict& verdict) {
  Json j;
  j["z_scores"] = numbers(verdict.z_scores);
  j["bits_gap"] = number(verdict.bits_gap);
  j["bits_stderr"] = number(verdict.bits_stderr);
  j["pass"] = verdict.pass;
  return j.dump(2);
}

ComparisonVerdict verdict_from_json(std::string_view text) {
  return parse_with(text, "comparison verdict", [](const Json& j) {
    ComparisonVerdict v;
    v.z_scores = read_numbers(j.at("z_scores"));
    v.bits_gap = read_number(j.at("bits_gap"));
    v.bits_stderr = read_number(j.at("bits_stderr"));
    v.pass = j.at("pass").get<bool>();
    return v;
  });
}

std::string trace_to_jsonl(const ProtocolTrace& trace) {
  struct Payload {
    const ProtocolTrace& trace;
    Json operator()(const event::Prepared&) const {
      return Json{{"d", trace.spec.d()},
                  {"coeffs", numbers({trace.spec.coeffs().begin(), trace.spec.coeffs().end()})},
                  {"seed", trace.seed}};
    }
    Json operator()(const event::AncillaAttached&) const { return Json::object(); }
    Json operator()(const event::UsimApplied&) const { return Json::object(); }
    Json operator()(const event::AncillaMeasured& e) const {
      return Json{{"k", e.k}, {"probability", number(e.probability)}};
    }
    Json operator()(const event::ClassicalBroadcast& e) const {
      return Json{{"k", e.k}, {"bits", number(e.bits)}};
    }
    Json operator()(const event::Encoded& e) const { return message_json(e.message); }
    Json operator()(const event::ParticlesSent&) const { return Json::object(); }
    Json operator()(const event::Decoded& e) const {
      return Json{{"message", message_json(e.message)},
                  {"overlap", number(e.overlap)},
                  {"decoded_ok", trace.outcome.decoded_ok()},
                  {"bits_conveyed", number(trace.outcome.bits_conveyed)}};
    }
  };

  std::string out;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    Json line;
    line["step"] = i;
    line["name"] = std::string(event_name(trace.events[i]));
    line["payload"] = std::visit(Payload{trace}, trace.events[i]);
    out += line.dump();
    out += '\n';
  }
  return out;
}

}  // namespace qdc
