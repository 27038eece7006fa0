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

#ifndef QDC_OPERATORS_HPP
#define QDC_OPERATORS_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "qdc/channel_spec.hpp"
#include "qdc/matrix.hpp"
#include "qdc/state_vector.hpp"

namespace qdc {

/// Registers of the channel state, then Alice's ancilla.
enum Register : std::size_t { kAlice = 0, kBob = 1, kCharlie = 2, kAncilla = 3 };

/// Index of the Weyl operator X^shift Z^phase.
struct WeylLabel {
  std::size_t d;
  std::size_t shift;
  std::size_t phase;
};

/// Branch k of the ancilla measurement; r = d - k channel terms survive.
struct BranchLabel {
  std::size_t d;
  std::size_t k;

  /// Throws RangeError unless 2 <= d <= 16 and k < d.
  static BranchLabel make(std::size_t d, std::size_t k);
  std::size_t r() const noexcept { return d - k; }
};

/// One encoding operation pair: Alice applies shift m after phase t, Bob
/// applies shift n. Valid when m, n < d and t < r.
struct MessageLabel {
  std::size_t m = 0;
  std::size_t t = 0;
  std::size_t n = 0;

  friend auto operator<=>(const MessageLabel&, const MessageLabel&) = default;
};

/// e^{2 pi i power / order}, with power reduced mod order first.
Complex root_of_unity(std::size_t order, std::size_t power);

/// |l> -> w^{phase l} |(l + shift) mod d>, w = e^{2 pi i / d}.
UnitaryMatrix weyl(std::size_t d, std::size_t shift, std::size_t phase);
inline UnitaryMatrix weyl(const WeylLabel& label) {
  return weyl(label.d, label.shift, label.phase);
}

/// Diagonal phase restricted to the branch support {k, ..., d-1}: level l >= k
/// gets e^{2 pi i t (l - k) / r}, lower levels are left alone.
UnitaryMatrix phase_op(std::size_t d, std::size_t branch, std::size_t t);

/// weyl(d, m, 0) * phase_op(d, branch, t): the phase acts first.
UnitaryMatrix alice_op(std::size_t d, std::size_t branch, std::size_t m, std::size_t t);

/// weyl(d, n, 0). Bob only shifts.
UnitaryMatrix bob_op(std::size_t d, std::size_t n);

/// Target image of |j, 0> on registers (A, a) under the splitting unitary:
/// (1/x_j) [x_0 |j,0> + sum_{k=1..j} sqrt(x_k^2 - x_{k-1}^2) |j,k>], or
/// |j, 0> itself when x_j = 0. Length d^2, label A * d + a.
std::vector<Complex> usim_constrained_column(const ChannelSpec& spec, std::size_t j);

/// The d^2 x d^2 splitting unitary on (A, a). Columns |j, 0> are the
/// constrained images above; the rest come from complete_to_unitary, so the
/// matrix is a pure function of the spec.
UnitaryMatrix build_usim(const ChannelSpec& spec);

/// Closed-form 9 x 9 splitting unitary for d = 3 with entries
///   m01 = x0/x1, m = sqrt(1 - x0^2/x1^2), m02 = x0/x2,
///   N = sqrt((x1^2 - x0^2)/x2^2), M = sqrt((x2^2 - x1^2)/x2^2).
/// When x1 = 0 the (A = 1) block is the diag(1, -1) limit. Throws RangeError
/// for d != 3.
UnitaryMatrix build_usim_reference(const ChannelSpec& spec);

/// (1/sqrt(r)) sum_{s=k..d-1} |sss>: the channel left in branch k.
StateVector branch_state(std::size_t d, std::size_t branch);

std::size_t message_count(std::size_t d, std::size_t branch);
/// Throws RangeError when msg is not valid for the branch.
void validate_message(std::size_t d, std::size_t branch, const MessageLabel& msg);
/// Position of msg in the lexicographic (m, t, n) order.
std::size_t message_index(std::size_t d, std::size_t branch, const MessageLabel& msg);
MessageLabel message_at(std::size_t d, std::size_t branch, std::size_t index);

/// alice_op on A and bob_op on B applied to branch_state(d, branch).
StateVector encoded_state(std::size_t d, std::size_t branch, const MessageLabel& msg);
inline StateVector encoded_state(const ChannelSpec& spec, std::size_t branch,
                                 const MessageLabel& msg) {
  return encoded_state(spec.d(), branch, msg);
}

/// All d^2 (d - branch) encoded states in (m, t, n) lexicographic order.
std::vector<StateVector> encoded_basis(std::size_t d, std::size_t branch);
inline std::vector<StateVector> encoded_basis(const ChannelSpec& spec, std::size_t branch) {
  return encoded_basis(spec.d(), branch);
}

}  // namespace qdc

#endif  // QDC_OPERATORS_HPP
