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

#include <benchmark/benchmark.h>

#include <cmath>

#include "qdc/operators.hpp"
#include "qdc/protocol.hpp"

namespace {

using namespace qdc;

ChannelSpec spec_for(std::size_t d) {
  std::vector<double> x(d);
  double sum = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    x[j] = static_cast<double>(j + 1);
    sum += x[j] * x[j];
  }
  for (auto& v : x) v /= std::sqrt(sum);
  return ChannelSpec(d, std::move(x));
}

void BM_ApplyUsim(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto spec = spec_for(d);
  const auto usim = build_usim(spec);
  const auto attached = tensor_product(prepare_channel(spec), StateVector::ket(d, {0}));
  for (auto _ : state) benchmark::DoNotOptimize(apply_unitary(usim, attached, {kAlice, kAncilla}));
}
BENCHMARK(BM_ApplyUsim)->DenseRange(2, 8, 2);

void BM_BuildUsim(benchmark::State& state) {
  const auto spec = spec_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_usim(spec));
}
BENCHMARK(BM_BuildUsim)->DenseRange(2, 8, 2);

void BM_EncodedBasis(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(encoded_basis(d, 0));
}
BENCHMARK(BM_EncodedBasis)->DenseRange(2, 6, 1);

void BM_Decode(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto basis = encoded_basis(d, 0);
  const auto s = encoded_state(d, 0, {d - 1, d - 1, d - 1});
  for (auto _ : state) benchmark::DoNotOptimize(decode(s, d, 0, basis));
}
BENCHMARK(BM_Decode)->DenseRange(2, 6, 1);

void BM_RunTrial(benchmark::State& state) {
  const ProtocolContext ctx(spec_for(static_cast<std::size_t>(state.range(0))));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RecordingChannel channel;
    benchmark::DoNotOptimize(run_trial(ctx, UniformMessages{}, seed++, channel));
  }
}
BENCHMARK(BM_RunTrial)->DenseRange(2, 6, 1);

}  // namespace

BENCHMARK_MAIN();
