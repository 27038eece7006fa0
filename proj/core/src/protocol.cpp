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

#include "qdc/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "qdc/errors.hpp"
#include "qdc/info.hpp"

namespace qdc {

StateVector prepare_channel(const ChannelSpec& spec) {
  const std::size_t d = spec.d();
  std::vector<Complex> amps(d * d * d);
  for (std::size_t j = 0; j < d; ++j) amps[j * d * d + j * d + j] = spec.coeff(j);
  return StateVector({d, d, d}, std::move(amps));
}

BranchOutcome split_channel(const StateVector& state, const ChannelSpec& spec,
                            const UnitaryMatrix& usim, Rng& rng) {
  const std::size_t d = spec.d();
  if (state.dims() != std::vector<std::size_t>{d, d, d})
    throw DimensionError("split_channel: state is not a three-register channel of this spec");
  const auto attached = tensor_product(state, StateVector::ket(d, {0}));
  const auto split = apply_unitary(usim, attached, {kAlice, kAncilla});
  auto measured = measure_register(split, kAncilla, rng);
  const std::size_t k = measured.index;
  return {d, k, d - k, measured.probability, slice_register(measured.post_state, kAncilla, k)};
}

BranchOutcome split_channel(const StateVector& state, const ChannelSpec& spec, Rng& rng) {
  return split_channel(state, spec, build_usim(spec), rng);
}

StateVector encode(const BranchOutcome& branch, const MessageLabel& msg) {
  validate_message(branch.d, branch.k, msg);
  auto s = apply_unitary(alice_op(branch.d, branch.k, msg.m, msg.t), branch.post_state, {kAlice});
  return apply_unitary(bob_op(branch.d, msg.n), s, {kBob});
}

DecodeResult decode(const StateVector& state, std::size_t d, std::size_t branch,
                    std::span<const StateVector> basis) {
  if (basis.size() != message_count(d, branch))
    throw DimensionError("decode: basis size does not match the branch alphabet");
  const auto hit = project_onto_basis(state, basis);
  return {message_at(d, branch, hit.index), hit.overlap};
}

DecodeResult decode(const StateVector& state, const ChannelSpec& spec, std::size_t branch) {
  const auto basis = encoded_basis(spec, branch);
  return decode(state, spec.d(), branch, basis);
}

double RecordingChannel::broadcast(std::size_t d, std::size_t branch) {
  branches_.push_back(branch);
  const double bits = classical_overhead(d);
  bits_ += bits;
  return bits;
}

std::string_view event_name(const TraceEvent& e) {
  struct Namer {
    std::string_view operator()(const event::Prepared&) const { return "Prepared"; }
    std::string_view operator()(const event::AncillaAttached&) const { return "AncillaAttached"; }
    std::string_view operator()(const event::UsimApplied&) const { return "UsimApplied"; }
    std::string_view operator()(const event::AncillaMeasured&) const { return "AncillaMeasured"; }
    std::string_view operator()(const event::ClassicalBroadcast&) const {
      return "ClassicalBroadcast";
    }
    std::string_view operator()(const event::Encoded&) const { return "Encoded"; }
    std::string_view operator()(const event::ParticlesSent&) const { return "ParticlesSent"; }
    std::string_view operator()(const event::Decoded&) const { return "Decoded"; }
  };
  return std::visit(Namer{}, e);
}

void validate_policy(const MessagePolicy& policy, std::size_t d) {
  if (const auto* fixed = std::get_if<FixedMessages>(&policy)) {
    if (fixed->per_branch.size() != d)
      throw RangeError("fixed message policy needs exactly one message per branch");
    for (std::size_t k = 0; k < d; ++k) validate_message(d, k, fixed->per_branch[k]);
  }
}

ProtocolContext::ProtocolContext(ChannelSpec spec)
    : spec_(std::move(spec)), channel_(prepare_channel(spec_)), usim_(build_usim(spec_)) {
  bases_.reserve(spec_.d());
  for (std::size_t k = 0; k < spec_.d(); ++k) bases_.push_back(encoded_basis(spec_, k));
}

namespace {

MessageLabel choose_message(const MessagePolicy& policy, std::size_t d, std::size_t branch,
                            Rng& rng) {
  if (const auto* fixed = std::get_if<FixedMessages>(&policy)) return fixed->per_branch.at(branch);
  return message_at(d, branch, static_cast<std::size_t>(rng.below(message_count(d, branch))));
}

}  // namespace

ProtocolTrace run_trial(const ProtocolContext& ctx, const MessagePolicy& policy,
                        std::uint64_t seed, ClassicalChannel& channel) {
  const std::size_t d = ctx.spec().d();
  validate_policy(policy, d);
  ProtocolTrace trace{ctx.spec(), seed, {}, {}};
  trace.events.reserve(8);
  Rng rng(seed);

  trace.events.emplace_back(event::Prepared{});
  auto branch = split_channel(ctx.channel_state(), ctx.spec(), ctx.usim(), rng);
  trace.events.emplace_back(event::AncillaAttached{});
  trace.events.emplace_back(event::UsimApplied{});
  trace.events.emplace_back(event::AncillaMeasured{branch.k, branch.probability});

  const double bits = channel.broadcast(d, branch.k);
  trace.events.emplace_back(event::ClassicalBroadcast{branch.k, bits});

  const MessageLabel sent = choose_message(policy, d, branch.k, rng);
  const auto encoded = encode(branch, sent);
  trace.events.emplace_back(event::Encoded{sent});
  trace.events.emplace_back(event::ParticlesSent{});

  const auto decoded = decode(encoded, d, branch.k, ctx.basis(branch.k));
  trace.events.emplace_back(event::Decoded{decoded.message, decoded.overlap});

  trace.outcome.branch = branch.k;
  trace.outcome.sent = sent;
  trace.outcome.decoded = decoded.message;
  trace.outcome.bits_conveyed =
      trace.outcome.decoded_ok() ? branch_capacity_bits(d, branch.k) : 0.0;
  return trace;
}

ProtocolTrace run_trial(const ChannelSpec& spec, const MessagePolicy& policy, std::uint64_t seed) {
  const ProtocolContext ctx(spec);
  RecordingChannel channel;
  return run_trial(ctx, policy, seed, channel);
}

BatchStats run_batch(const ChannelSpec& spec, std::uint64_t trials, std::uint64_t base_seed,
                     const MessagePolicy& policy, const BatchOptions& options) {
  if (trials == 0) throw RangeError("run_batch needs at least one trial");
  validate_policy(policy, spec.d());
  const std::size_t d = spec.d();
  const ProtocolContext ctx(spec);

  struct Tally {
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> failures;
  };
  const std::size_t threads = static_cast<std::size_t>(
      std::clamp<std::uint64_t>(options.threads == 0 ? 1 : options.threads, 1, trials));
  std::vector<Tally> tallies(threads, Tally{std::vector<std::uint64_t>(d, 0),
                                            std::vector<std::uint64_t>(d, 0)});
  std::vector<TrialRecord> records(options.keep_records ? trials : 0);

  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](std::size_t w) {
    try {
      const std::uint64_t begin = trials * w / threads;
      const std::uint64_t end = trials * (w + 1) / threads;
      RecordingChannel channel;
      for (std::uint64_t i = begin; i < end; ++i) {
        const auto trace = run_trial(ctx, policy, derive_seed(base_seed, i), channel);
        const auto& out = trace.outcome;
        ++tallies[w].counts[out.branch];
        if (!out.decoded_ok()) ++tallies[w].failures[out.branch];
        if (options.keep_records)
          records[i] = {i, out.branch, out.sent, out.decoded_ok(), out.bits_conveyed};
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }
  if (error) std::rethrow_exception(error);

  BatchStats stats;
  stats.d = d;
  stats.coeffs.assign(spec.coeffs().begin(), spec.coeffs().end());
  stats.trials = trials;
  stats.base_seed = base_seed;
  stats.branch_counts.assign(d, 0);
  stats.branch_failures.assign(d, 0);
  for (const auto& t : tallies) {
    for (std::size_t k = 0; k < d; ++k) {
      stats.branch_counts[k] += t.counts[k];
      stats.branch_failures[k] += t.failures[k];
    }
  }
  const double n = static_cast<double>(trials);
  for (std::size_t k = 0; k < d; ++k) {
    stats.failures += stats.branch_failures[k];
    const auto ok = stats.branch_counts[k] - stats.branch_failures[k];
    if (ok != 0) stats.bits_per_run += (static_cast<double>(ok) / n) * branch_capacity_bits(d, k);
  }
  stats.records = std::move(records);
  return stats;
}

}  // namespace qdc
