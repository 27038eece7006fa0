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

#include "qdc/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "format.hpp"
#include "qdc/errors.hpp"

namespace qdc {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// strides[i] is the label weight of register i.
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> strides(dims.size());
  std::size_t stride = 1;
  for (std::size_t i = dims.size(); i-- > 0;) {
    strides[i] = stride;
    stride *= dims[i];
  }
  return strides;
}

void require_same_dims(const StateVector& a, const StateVector& b, const char* what) {
  if (a.dims() != b.dims()) throw DimensionError(std::string(what) + ": dims mismatch");
}

}  // namespace

StateVector::StateVector(std::vector<std::size_t> dims, std::vector<Complex> amps)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
  if (dims_.empty()) throw DimensionError("state needs at least one register");
  for (auto d : dims_) {
    if (d < 2) throw DimensionError("register dimension must be at least 2");
  }
  if (amps_.size() != product(dims_))
    throw DimensionError("amplitude count does not match the product of dims");
  for (const auto& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DimensionError("non-finite amplitude");
  }
}

StateVector StateVector::zero(std::vector<std::size_t> dims) {
  const std::size_t n = product(dims);
  return StateVector(std::move(dims), std::vector<Complex>(n));
}

StateVector StateVector::ket(std::vector<std::size_t> dims, std::span<const std::size_t> digits) {
  StateVector s = zero(std::move(dims));
  s.amps_[s.label_of(digits)] = 1.0;
  return s;
}

StateVector StateVector::ket(std::size_t d, std::initializer_list<std::size_t> digits) {
  return ket(std::vector<std::size_t>(digits.size(), d),
             std::span<const std::size_t>(digits.begin(), digits.size()));
}

Complex StateVector::amplitude(std::initializer_list<std::size_t> digits) const {
  return amps_[label_of(std::span<const std::size_t>(digits.begin(), digits.size()))];
}

std::size_t StateVector::label_of(std::span<const std::size_t> digits) const {
  if (digits.size() != dims_.size()) throw DimensionError("digit count does not match registers");
  std::size_t label = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= dims_[i]) throw DimensionError("digit out of range for register");
    label = label * dims_[i] + digits[i];
  }
  return label;
}

std::vector<std::size_t> StateVector::digits_of(std::size_t label) const {
  if (label >= amps_.size()) throw DimensionError("label out of range");
  std::vector<std::size_t> digits(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    digits[i] = label % dims_[i];
    label /= dims_[i];
  }
  return digits;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& z : amps_) acc += std::norm(z);
  return std::sqrt(acc);
}

bool StateVector::is_normalized(double tol) const {
  double acc = 0.0;
  for (const auto& z : amps_) acc += std::norm(z);
  return std::abs(acc - 1.0) <= tol;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  std::vector<Complex> amps;
  amps.reserve(a.size() * b.size());
  for (const auto& x : a.amps())
    for (const auto& y : b.amps()) amps.push_back(x * y);
  return StateVector(std::move(dims), std::move(amps));
}

StateVector apply_unitary(const UnitaryMatrix& u, const StateVector& s,
                          std::span<const std::size_t> targets) {
  const auto& dims = s.dims();
  if (targets.empty()) throw DimensionError("apply_unitary: no target registers");
  std::vector<bool> is_target(dims.size(), false);
  std::size_t sub_dim = 1;
  for (auto t : targets) {
    if (t >= dims.size()) throw DimensionError("apply_unitary: target out of range");
    if (is_target[t]) throw DimensionError("apply_unitary: duplicate target");
    is_target[t] = true;
    sub_dim *= dims[t];
  }
  if (u.dim() != sub_dim)
    throw DimensionError("apply_unitary: operator dimension does not match targets");

  const auto strides = strides_of(dims);
  // offsets[r]: label displacement of sub-label r within the targeted registers.
  std::vector<std::size_t> offsets(sub_dim, 0);
  for (std::size_t r = 0; r < sub_dim; ++r) {
    std::size_t rem = r;
    for (std::size_t i = targets.size(); i-- > 0;) {
      const std::size_t t = targets[i];
      offsets[r] += (rem % dims[t]) * strides[t];
      rem /= dims[t];
    }
  }

  std::vector<Complex> out(s.size());
  std::vector<Complex> in_sub(sub_dim);
  const auto amps = s.amps();
  for (std::size_t base = 0; base < s.size(); ++base) {
    bool at_origin = true;
    for (auto t : targets) {
      if ((base / strides[t]) % dims[t] != 0) {
        at_origin = false;
        break;
      }
    }
    if (!at_origin) continue;
    for (std::size_t c = 0; c < sub_dim; ++c) in_sub[c] = amps[base + offsets[c]];
    for (std::size_t r = 0; r < sub_dim; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < sub_dim; ++c) acc += u(r, c) * in_sub[c];
      out[base + offsets[r]] = acc;
    }
  }
  return StateVector(dims, std::move(out));
}

StateVector apply_unitary(const UnitaryMatrix& u, const StateVector& s,
                          std::initializer_list<std::size_t> targets) {
  return apply_unitary(u, s, std::span<const std::size_t>(targets.begin(), targets.size()));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_dims(a, b, "inner_product");
  Complex acc{};
  const auto x = a.amps();
  const auto y = b.amps();
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  require_same_dims(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::vector<double> register_distribution(const StateVector& s, std::size_t target) {
  if (target >= s.registers()) throw DimensionError("register index out of range");
  const auto strides = strides_of(s.dims());
  const std::size_t d = s.dims()[target];
  std::vector<double> probs(d, 0.0);
  for (std::size_t label = 0; label < s.size(); ++label)
    probs[(label / strides[target]) % d] += std::norm(s[label]);
  return probs;
}

MeasurementOutcome measure_register(const StateVector& s, std::size_t target, Rng& rng) {
  auto probs = register_distribution(s, target);
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (!(total > 0.0)) throw MeasurementError("cannot measure a zero-norm state");
  for (auto& p : probs) p /= total;

  const double u = rng.uniform();
  std::size_t outcome = probs.size();
  double cumulative = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    cumulative += probs[k];
    if (u < cumulative) {
      outcome = k;
      break;
    }
  }
  if (outcome == probs.size()) {
    // Rounding left u above the final cumulative sum: take the last live outcome.
    for (std::size_t k = probs.size(); k-- > 0;) {
      if (probs[k] > 0.0) {
        outcome = k;
        break;
      }
    }
  }

  const auto strides = strides_of(s.dims());
  const std::size_t d = s.dims()[target];
  const double scale = 1.0 / std::sqrt(probs[outcome] * total);
  std::vector<Complex> post(s.size());
  for (std::size_t label = 0; label < s.size(); ++label) {
    if ((label / strides[target]) % d == outcome) post[label] = s[label] * scale;
  }
  return {outcome, probs[outcome], StateVector(s.dims(), std::move(post))};
}

StateVector slice_register(const StateVector& s, std::size_t target, std::size_t value) {
  if (target >= s.registers()) throw DimensionError("register index out of range");
  if (s.registers() < 2) throw DimensionError("cannot remove the only register");
  if (value >= s.dims()[target]) throw DimensionError("slice value out of range");
  const auto strides = strides_of(s.dims());
  const std::size_t d = s.dims()[target];

  std::vector<std::size_t> dims = s.dims();
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(target));
  std::vector<Complex> amps;
  amps.reserve(s.size() / d);
  double acc = 0.0;
  for (std::size_t label = 0; label < s.size(); ++label) {
    if ((label / strides[target]) % d != value) continue;
    amps.push_back(s[label]);
    acc += std::norm(s[label]);
  }
  if (acc > 0.0) {
    const double scale = 1.0 / std::sqrt(acc);
    for (auto& z : amps) z *= scale;
  }
  return StateVector(std::move(dims), std::move(amps));
}

Projection best_overlap(const StateVector& s, std::span<const StateVector> basis) {
  if (basis.empty()) throw DimensionError("projection onto an empty basis");
  Projection best{0, -1.0};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double overlap = std::abs(inner_product(basis[i], s));
    if (overlap > best.overlap) best = {i, overlap};
  }
  return best;
}

Projection project_onto_basis(const StateVector& s, std::span<const StateVector> basis) {
  const Projection best = best_overlap(s, basis);
  if (best.overlap < 1.0 - kMembershipTol) {
    throw DecodeError("state lies outside the encoded family: best overlap " +
                          detail::format17(best.overlap) + " at basis index " +
                          std::to_string(best.index),
                      best.index, best.overlap);
  }
  return best;
}

double orthonormality_error(std::span<const StateVector> states) {
  double worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i; j < states.size(); ++j) {
      Complex g = inner_product(states[i], states[j]);
      if (i == j) g -= 1.0;
      worst = std::max(worst, std::abs(g));
    }
  }
  return worst;
}

std::string serialize_state(const StateVector& s) {
  std::string out = "{\"dims\":[";
  for (std::size_t i = 0; i < s.dims().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.dims()[i]);
  }
  out += "],\"amps\":[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    detail::append_pair(out, s[i]);
  }
  out += "]}";
  return out;
}

StateVector parse_state(std::string_view record) {
  try {
    const auto j = nlohmann::json::parse(record);
    auto dims = j.at("dims").get<std::vector<std::size_t>>();
    std::vector<Complex> amps;
    for (const auto& pair : j.at("amps")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("amplitude must be [re, im]");
      amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return StateVector(std::move(dims), std::move(amps));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed state record: ") + e.what());
  }
}

}  // namespace qdc
