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

// The three-party probabilistic dense coding run:
//
//   1. Alice attaches an ancilla |0>_a, applies the splitting unitary to
//      (A, a) and measures a, leaving branch k with r = d - k equal terms.
//   2. She broadcasts k (2 log2 d classical bits); Alice and Bob encode.
//   3. A and B are sent to Charlie.
//   4. Charlie measures in the encoded basis of branch k.

#ifndef QDC_PROTOCOL_HPP
#define QDC_PROTOCOL_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "qdc/batch_stats.hpp"
#include "qdc/channel_spec.hpp"
#include "qdc/matrix.hpp"
#include "qdc/operators.hpp"
#include "qdc/rng.hpp"
#include "qdc/state_vector.hpp"

namespace qdc {

/// sum_j x_j |jjj> over registers (A, B, C).
StateVector prepare_channel(const ChannelSpec& spec);

struct BranchOutcome {
  std::size_t d = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  double probability = 0.0;  // measured probability of this ancilla outcome
  StateVector post_state;    // reduced (A, B, C) state

  friend bool operator==(const BranchOutcome&, const BranchOutcome&) = default;
};

/// Step 1: attach |0>_a, apply build_usim(spec) on (A, a), measure a with one
/// draw from rng and drop the ancilla. `state` must be prepare_channel(spec).
BranchOutcome split_channel(const StateVector& state, const ChannelSpec& spec, Rng& rng);
BranchOutcome split_channel(const StateVector& state, const ChannelSpec& spec,
                            const UnitaryMatrix& usim, Rng& rng);

/// Step 2: alice_op on A, bob_op on B of the live branch state.
/// Throws RangeError when msg is out of range for the branch (e.g. t >= r).
StateVector encode(const BranchOutcome& branch, const MessageLabel& msg);

struct DecodeResult {
  MessageLabel message;
  double overlap = 0.0;
};

/// Step 4: measurement in encoded_basis(spec, branch). Throws DecodeError when
/// the state is outside the encoded family.
DecodeResult decode(const StateVector& state, const ChannelSpec& spec, std::size_t branch);
DecodeResult decode(const StateVector& state, std::size_t d, std::size_t branch,
                    std::span<const StateVector> basis);

/// Announces Alice's ancilla outcome to Bob and Charlie.
class ClassicalChannel {
 public:
  virtual ~ClassicalChannel() = default;
  /// Returns the number of classical bits charged for the announcement.
  virtual double broadcast(std::size_t d, std::size_t branch) = 0;
};

/// In-process channel charging 2 log2 d bits per broadcast.
class RecordingChannel final : public ClassicalChannel {
 public:
  double broadcast(std::size_t d, std::size_t branch) override;

  std::size_t broadcasts() const noexcept { return branches_.size(); }
  const std::vector<std::size_t>& branches() const noexcept { return branches_; }
  double bits_charged() const noexcept { return bits_; }

 private:
  std::vector<std::size_t> branches_;
  double bits_ = 0.0;
};

namespace event {
struct Prepared {
  friend bool operator==(const Prepared&, const Prepared&) = default;
};
struct AncillaAttached {
  friend bool operator==(const AncillaAttached&, const AncillaAttached&) = default;
};
struct UsimApplied {
  friend bool operator==(const UsimApplied&, const UsimApplied&) = default;
};
struct AncillaMeasured {
  std::size_t k;
  double probability;
  friend bool operator==(const AncillaMeasured&, const AncillaMeasured&) = default;
};
struct ClassicalBroadcast {
  std::size_t k;
  double bits;
  friend bool operator==(const ClassicalBroadcast&, const ClassicalBroadcast&) = default;
};
struct Encoded {
  MessageLabel message;
  friend bool operator==(const Encoded&, const Encoded&) = default;
};
struct ParticlesSent {
  friend bool operator==(const ParticlesSent&, const ParticlesSent&) = default;
};
struct Decoded {
  MessageLabel message;
  double overlap;
  friend bool operator==(const Decoded&, const Decoded&) = default;
};
}  // namespace event

using TraceEvent = std::variant<event::Prepared, event::AncillaAttached, event::UsimApplied,
                                event::AncillaMeasured, event::ClassicalBroadcast,
                                event::Encoded, event::ParticlesSent, event::Decoded>;

std::string_view event_name(const TraceEvent& e);

struct TrialOutcome {
  std::size_t branch = 0;
  MessageLabel sent;
  MessageLabel decoded;
  double bits_conveyed = 0.0;  // log2(d^2 r) when decoded == sent, else 0

  bool decoded_ok() const noexcept { return sent == decoded; }
  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

/// Ordered event log of one run. Events always appear in variant order.
struct ProtocolTrace {
  ChannelSpec spec;
  std::uint64_t seed = 0;
  std::vector<TraceEvent> events;
  TrialOutcome outcome;

  friend bool operator==(const ProtocolTrace&, const ProtocolTrace&) = default;
};

/// Draw the message uniformly from the branch's alphabet.
struct UniformMessages {};
/// One message per branch, indexed by k; entry k must be valid for branch k.
struct FixedMessages {
  std::vector<MessageLabel> per_branch;
};
using MessagePolicy = std::variant<UniformMessages, FixedMessages>;

/// Throws RangeError when a fixed table does not fit the spec.
void validate_policy(const MessagePolicy& policy, std::size_t d);

/// Spec-derived values shared read-only by every trial of a batch: the
/// channel state, the splitting unitary and the per-branch decoding bases.
class ProtocolContext {
 public:
  explicit ProtocolContext(ChannelSpec spec);

  const ChannelSpec& spec() const noexcept { return spec_; }
  const StateVector& channel_state() const noexcept { return channel_; }
  const UnitaryMatrix& usim() const noexcept { return usim_; }
  std::span<const StateVector> basis(std::size_t branch) const { return bases_.at(branch); }

 private:
  ChannelSpec spec_;
  StateVector channel_;
  UnitaryMatrix usim_;
  std::vector<std::vector<StateVector>> bases_;
};

/// One full run. The rng is seeded with `seed`; the ancilla draw comes first,
/// then (uniform policy) the message draw. Identical inputs give identical traces.
ProtocolTrace run_trial(const ChannelSpec& spec, const MessagePolicy& policy, std::uint64_t seed);
ProtocolTrace run_trial(const ProtocolContext& ctx, const MessagePolicy& policy,
                        std::uint64_t seed, ClassicalChannel& channel);

struct BatchOptions {
  std::size_t threads = 1;
  bool keep_records = false;
};

/// Runs `trials` trials, trial i seeded with derive_seed(base_seed, i).
/// The result does not depend on options.threads. Throws RangeError when
/// trials == 0.
BatchStats run_batch(const ChannelSpec& spec, std::uint64_t trials, std::uint64_t base_seed,
                     const MessagePolicy& policy = UniformMessages{},
                     const BatchOptions& options = {});

}  // namespace qdc

#endif  // QDC_PROTOCOL_HPP
