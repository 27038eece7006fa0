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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtest/gtest.h"
#include "qdc/state_vector.hpp"

namespace qdc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qdc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(ResolveCoeffs, AutoCompletion) {
  const auto xs = resolve_coeffs("0.4,0.5,auto", false);
  ASSERT_EQ(xs.size(), 3u);
  EXPECT_NEAR(xs[2], std::sqrt(0.59), 1e-15);
  EXPECT_THROW(resolve_coeffs("0.8,0.7,auto", false), SpecError);
  EXPECT_THROW(resolve_coeffs("auto,0.5", false), RangeError);
  EXPECT_THROW(resolve_coeffs("0.4,x", false), RangeError);
}

TEST(ResolveCoeffs, SortFlag) {
  const auto xs = resolve_coeffs("0.8,0.6", true);
  EXPECT_EQ(xs, (std::vector<double>{0.6, 0.8}));
}

TEST(ParseDRange, SingleAndRange) {
  EXPECT_EQ(parse_d_range("3"), (std::pair<std::size_t, std::size_t>{3, 3}));
  EXPECT_EQ(parse_d_range("2..5"), (std::pair<std::size_t, std::size_t>{2, 5}));
  EXPECT_THROW(parse_d_range("5..2"), RangeError);
}

TEST(Info, UniformQutrit) {
  const auto r = invoke({"info", "--d", "3", "--coeffs", "0.57735,0.57735,auto", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["i_aver_bits"].get<double>(), 4.7549, 1e-4);
}

TEST(Info, DescendingIsOrderingViolation) {
  const auto r = invoke({"info", "--d", "3", "--coeffs", "0.5,0.4,auto"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("ordering"), std::string::npos) << r.err;
}

TEST(Info, SortFlagAcceptsDescending) {
  EXPECT_EQ(invoke({"info", "--d", "3", "--coeffs", "0.5,0.4,auto", "--sort"}).code, kExitOk);
}

TEST(Info, OverfullAutoIsNormalizationViolation) {
  const auto r = invoke({"info", "--d", "3", "--coeffs", "0.8,0.7,auto"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("normalization"), std::string::npos) << r.err;
}

TEST(Info, QuquartJson) {
  const auto r = invoke({"info", "--d", "4", "--coeffs", "0.3,0.4,0.5,auto", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["i_aver_bits"].get<double>(), 5.2328, 1e-4);
  EXPECT_EQ(j["p"].size(), 4u);
}

TEST(Info, TableUsesSixSignificantDigits) {
  const auto r = invoke({"info", "--d", "3", "--coeffs", "0.4,0.5,auto"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("i_aver_bits = 4.11071"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("overhead_bits = 3.16993"), std::string::npos) << r.out;
}

TEST(Info, CsvHasFullPrecision) {
  const auto r = invoke({"info", "--d", "3", "--coeffs", "0.4,0.5,auto", "--format", "csv"});
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "branch,r,p,capacity_bits,contribution_bits");
  std::vector<std::string> fields;
  std::istringstream row(lines[1]);
  for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
  ASSERT_EQ(fields.size(), 5u);
  EXPECT_NEAR(std::stod(fields[2]), 0.48, 1e-15);
  EXPECT_EQ(std::stod(fields[3]), std::log2(27.0));
}

TEST(Info, MissingInputsAreUsageErrors) {
  EXPECT_EQ(invoke({"info"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"info", "--d", "3", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"info", "--d", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"info", "--d", "3", "--coeffs", "0.6,0.8"}).code, kExitUsage);
}

TEST(Run, FixtureBatchPasses) {
  const auto r = invoke({"run", "--d", "3", "--coeffs", "0.4,0.5,auto", "--trials", "100000",
                         "--seed", "7", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["verdict"]["pass"].get<bool>());
  const auto freq = j["stats"]["freq"];
  EXPECT_NEAR(freq[0].get<double>(), 0.48, 0.01);
  EXPECT_NEAR(freq[1].get<double>(), 0.18, 0.01);
  EXPECT_NEAR(freq[2].get<double>(), 0.34, 0.01);
  EXPECT_EQ(j["stats"]["failures"].get<int>(), 0);
}

TEST(Run, ZeroTrialsIsUsageError) {
  EXPECT_EQ(invoke({"run", "--d", "3", "--trials", "0"}).code, kExitUsage);
}

TEST(Run, DeterministicAcrossInvocationsAndThreads) {
  const std::vector<std::string> base{"run", "--d", "3", "--coeffs", "0.4,0.5,auto",
                                      "--trials", "20000", "--seed", "11", "--format", "json"};
  auto with_threads = base;
  with_threads.insert(with_threads.end(), {"--threads", "4"});
  const auto a = invoke(base);
  const auto b = invoke(base);
  const auto c = invoke(with_threads);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Run, CsvColumns) {
  const auto r = invoke({"run", "--d", "3", "--coeffs", "0.4,0.5,auto", "--trials", "50",
                         "--seed", "1", "--format", "csv"});
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 51u);
  EXPECT_EQ(lines[0], "trial,branch,m,t,n,decoded_ok,bits");
}

TEST(Run, FixedPolicy) {
  EXPECT_EQ(invoke({"run", "--d", "3", "--trials", "100", "--policy", "fixed", "--messages",
                    "1:2:0,0:1:1,2:0:2"})
                .code,
            kExitOk);
  EXPECT_EQ(invoke({"run", "--d", "3", "--trials", "100", "--policy", "fixed", "--messages",
                    "1:2:0,0:2:1,2:0:2"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"run", "--d", "3", "--trials", "100", "--policy", "fixed"}).code, kExitUsage);
}

TEST(Verify, QutritListsTheFullBasisSuite) {
  const auto r = invoke({"verify", "--d", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("27-basis orthonormal"), std::string::npos) << r.out;
}

TEST(Verify, SmallRangePasses) {
  EXPECT_EQ(invoke({"verify", "--d", "2..5"}).code, kExitOk);
}

TEST(Verify, InjectedFaultNamesCompositionSuite) {
  const auto r = invoke({"verify", "--d", "3", "--inject-fault", "negated-phase"});
  EXPECT_EQ(r.code, kExitFailure);
  for (const auto& line : lines_of(r.out)) {
    if (line.rfind("FAIL", 0) == 0) EXPECT_NE(line.find("weyl-composition"), std::string::npos) << line;
  }
  EXPECT_NE(r.out.find("FAIL d=3 weyl-composition"), std::string::npos);
}

TEST(Verify, OutOfRange) {
  EXPECT_EQ(invoke({"verify", "--d", "9"}).code, kExitUsage);
}

TEST(Basis, ProductBranch) {
  const auto r = invoke({"basis", "--d", "3", "--branch", "2"});
  EXPECT_EQ(r.code, kExitOk);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(parse_state(lines[0]), StateVector::ket(3, {2, 2, 2}));
}

TEST(Basis, FullBranchCount) {
  EXPECT_EQ(lines_of(invoke({"basis", "--d", "3", "--branch", "0"}).out).size(), 27u);
}

TEST(Basis, OutOfRangeBranch) {
  EXPECT_EQ(invoke({"basis", "--d", "3", "--branch", "3"}).code, kExitUsage);
}

TEST(Basis, MatrixDumps) {
  const auto alice = invoke({"basis", "--d", "3", "--branch", "1", "--dump", "alice"});
  EXPECT_EQ(alice.code, kExitOk);
  EXPECT_EQ(lines_of(alice.out).size(), 6u * 4u);
  const auto usim = invoke({"basis", "--d", "3", "--coeffs", "0.4,0.5,auto", "--dump", "usim"});
  EXPECT_EQ(usim.code, kExitOk);
  const auto rows = lines_of(usim.out);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[0].rfind("[[1,0],[0,0]", 0), 0u) << rows[0];
}

}  // namespace
}  // namespace qdc::cli
