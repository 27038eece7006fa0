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

#include "qdc/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

void require_dimension(std::size_t d) {
  if (d < kMinDimension || d > kMaxDimension)
    throw RangeError("dimension d = " + std::to_string(d) + " outside [2, 16]");
}

void require_below(std::size_t value, std::size_t bound, const char* what) {
  if (value >= bound) {
    throw RangeError(std::string(what) + " = " + std::to_string(value) + " must be below " +
                     std::to_string(bound));
  }
}

// sqrt(x_k^2 - x_{k-1}^2) with x_{-1} = 0.
double gap(std::span<const double> x, std::size_t k) {
  const double lower = k == 0 ? 0.0 : x[k - 1] * x[k - 1];
  return std::sqrt(std::max(0.0, x[k] * x[k] - lower));
}

}  // namespace

BranchLabel BranchLabel::make(std::size_t d, std::size_t k) {
  require_dimension(d);
  require_below(k, d, "branch index");
  return {d, k};
}

Complex root_of_unity(std::size_t order, std::size_t power) {
  const std::size_t p = power % order;
  if (p == 0) return 1.0;
  if (2 * p == order) return -1.0;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(order);
  return std::polar(1.0, angle);
}

UnitaryMatrix weyl(std::size_t d, std::size_t shift, std::size_t phase) {
  require_dimension(d);
  require_below(shift, d, "shift");
  require_below(phase, d, "phase");
  Matrix m(d);
  for (std::size_t l = 0; l < d; ++l) m((l + shift) % d, l) = root_of_unity(d, phase * l);
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix phase_op(std::size_t d, std::size_t branch, std::size_t t) {
  const auto b = BranchLabel::make(d, branch);
  require_below(t, b.r(), "branch phase t");
  Matrix m(d);
  for (std::size_t l = 0; l < d; ++l)
    m(l, l) = l < branch ? Complex{1.0} : root_of_unity(b.r(), t * (l - branch));
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix alice_op(std::size_t d, std::size_t branch, std::size_t m, std::size_t t) {
  return weyl(d, m, 0) * phase_op(d, branch, t);
}

UnitaryMatrix bob_op(std::size_t d, std::size_t n) { return weyl(d, n, 0); }

std::vector<Complex> usim_constrained_column(const ChannelSpec& spec, std::size_t j) {
  const std::size_t d = spec.d();
  require_below(j, d, "level j");
  const auto x = spec.coeffs();
  std::vector<Complex> col(d * d);
  if (x[j] == 0.0) {
    col[j * d] = 1.0;
    return col;
  }
  for (std::size_t k = 0; k <= j; ++k) col[j * d + k] = gap(x, k) / x[j];
  return col;
}

UnitaryMatrix build_usim(const ChannelSpec& spec) {
  const std::size_t d = spec.d();
  std::vector<FixedColumn> fixed;
  fixed.reserve(d);
  for (std::size_t j = 0; j < d; ++j) fixed.push_back({j * d, usim_constrained_column(spec, j)});
  return complete_to_unitary(d * d, fixed);
}

UnitaryMatrix build_usim_reference(const ChannelSpec& spec) {
  if (spec.d() != 3) throw RangeError("closed-form splitting unitary exists for d = 3 only");
  const double x0 = spec.coeff(0);
  const double x1 = spec.coeff(1);
  const double x2 = spec.coeff(2);

  const double m01 = x1 > 0.0 ? x0 / x1 : 1.0;
  const double m = x1 > 0.0 ? std::sqrt(std::max(0.0, 1.0 - (x0 * x0) / (x1 * x1))) : 0.0;
  const double m02 = x0 / x2;
  const double big_n = std::sqrt(std::max(0.0, (x1 * x1 - x0 * x0) / (x2 * x2)));
  const double big_m = std::sqrt(std::max(0.0, (x2 * x2 - x1 * x1) / (x2 * x2)));

  Matrix u(9);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 2) = 1.0;

  u(3, 3) = m01;
  u(3, 4) = m;
  u(4, 3) = m;
  u(4, 4) = -m01;

  u(5, 5) = m02;
  u(5, 7) = big_m;
  u(5, 8) = -big_n;
  u(6, 6) = m02;
  u(6, 7) = big_n;
  u(6, 8) = big_m;
  u(7, 5) = big_m;
  u(7, 6) = big_n;
  u(7, 7) = -m02;
  u(8, 5) = -big_n;
  u(8, 6) = big_m;
  u(8, 8) = -m02;
  return UnitaryMatrix(std::move(u));
}

StateVector branch_state(std::size_t d, std::size_t branch) {
  const auto b = BranchLabel::make(d, branch);
  std::vector<Complex> amps(d * d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(b.r()));
  for (std::size_t l = branch; l < d; ++l) amps[l * d * d + l * d + l] = amp;
  return StateVector({d, d, d}, std::move(amps));
}

std::size_t message_count(std::size_t d, std::size_t branch) {
  const auto b = BranchLabel::make(d, branch);
  return d * d * b.r();
}

void validate_message(std::size_t d, std::size_t branch, const MessageLabel& msg) {
  const auto b = BranchLabel::make(d, branch);
  require_below(msg.m, d, "message shift m");
  require_below(msg.t, b.r(), "message phase t");
  require_below(msg.n, d, "message Bob shift n");
}

std::size_t message_index(std::size_t d, std::size_t branch, const MessageLabel& msg) {
  validate_message(d, branch, msg);
  const std::size_t r = d - branch;
  return (msg.m * r + msg.t) * d + msg.n;
}

MessageLabel message_at(std::size_t d, std::size_t branch, std::size_t index) {
  require_below(index, message_count(d, branch), "message index");
  const std::size_t r = d - branch;
  return {index / (r * d), (index / d) % r, index % d};
}

StateVector encoded_state(std::size_t d, std::size_t branch, const MessageLabel& msg) {
  validate_message(d, branch, msg);
  StateVector s = branch_state(d, branch);
  s = apply_unitary(alice_op(d, branch, msg.m, msg.t), s, {kAlice});
  return apply_unitary(bob_op(d, msg.n), s, {kBob});
}

std::vector<StateVector> encoded_basis(std::size_t d, std::size_t branch) {
  const std::size_t count = message_count(d, branch);
  std::vector<StateVector> basis;
  basis.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    basis.push_back(encoded_state(d, branch, message_at(d, branch, i)));
  return basis;
}

}  // namespace qdc
