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

#include "qdc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format.hpp"
#include "qdc/channel_spec.hpp"
#include "qdc/errors.hpp"
#include "qdc/operators.hpp"
#include "qdc/protocol.hpp"

namespace qdc {

namespace {

using detail::format17;

SuiteResult named_suite(std::string name) {
  SuiteResult suite;
  suite.name = std::move(name);
  return suite;
}

void fail(SuiteResult& suite, const std::string& what) {
  if (suite.passed) suite.counterexample = what;
  suite.passed = false;
}

std::string fmt_label(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Specs exercised by the U_sim suites: uniform, one leading-zero spec and
// seeded random draws.
std::vector<ChannelSpec> suite_specs(std::size_t d, const VerifyOptions& options) {
  std::vector<ChannelSpec> specs{ChannelSpec::uniform(d)};
  std::vector<double> tail(d, 0.0);
  const double x = 1.0 / std::sqrt(static_cast<double>(d - 1));
  for (std::size_t j = 1; j < d; ++j) tail[j] = x;
  specs.emplace_back(d, tail);
  Rng rng(derive_seed(options.seed, d));
  for (std::size_t i = 0; i < options.random_specs; ++i)
    specs.push_back(random_channel_spec(d, rng));
  return specs;
}

void check_unitary(SuiteResult& suite, const std::string& name, const UnitaryMatrix& u) {
  ++suite.checks;
  const double err = unitarity_error(u.matrix());
  if (err > kUnitarityTol) fail(suite, name + " unitarity error " + format17(err));
}

template <typename Fn>
void guarded(SuiteResult& suite, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    ++suite.checks;
    fail(suite, name + ": " + e.what());
  }
}

SuiteResult unitarity_suite(std::size_t d, const VerifyOptions& options) {
  auto suite = named_suite("unitarity");
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const auto name = "weyl" + fmt_label(j, k);
      guarded(suite, name, [&] { check_unitary(suite, name, options.weyl(d, j, k)); });
    }
  for (std::size_t b = 0; b < d; ++b) {
    for (std::size_t t = 0; t < d - b; ++t) {
      guarded(suite, "phase_op", [&] {
        check_unitary(suite, "phase_op" + fmt_label(b, t), phase_op(d, b, t));
      });
      for (std::size_t m = 0; m < d; ++m) {
        guarded(suite, "alice_op", [&] {
          check_unitary(suite, "alice_op(branch " + std::to_string(b) + ")" + fmt_label(m, t),
                        alice_op(d, b, m, t));
        });
      }
    }
  }
  for (std::size_t n = 0; n < d; ++n)
    guarded(suite, "bob_op", [&] { check_unitary(suite, "bob_op", bob_op(d, n)); });
  for (const auto& spec : suite_specs(d, options))
    guarded(suite, "usim", [&] { check_unitary(suite, "usim", build_usim(spec)); });
  return suite;
}

SuiteResult composition_suite(std::size_t d, const VerifyOptions& options) {
  auto suite = named_suite("weyl-composition");
  guarded(suite, "weyl", [&] {
    std::vector<UnitaryMatrix> table;
    table.reserve(d * d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) table.push_back(options.weyl(d, j, k));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j2 = 0; j2 < d; ++j2)
          for (std::size_t k2 = 0; k2 < d; ++k2) {
            ++suite.checks;
            const Matrix lhs = table[j * d + k].matrix() * table[j2 * d + k2].matrix();
            Matrix rhs = table[((j + j2) % d) * d + (k + k2) % d].matrix();
            rhs *= root_of_unity(d, k * j2);
            const double err = max_abs_diff(lhs, rhs);
            if (err > kUnitarityTol) {
              fail(suite, "weyl" + fmt_label(j, k) + " * weyl" + fmt_label(j2, k2) +
                              " != w^(k j') weyl" + fmt_label((j + j2) % d, (k + k2) % d) +
                              ", max deviation " + format17(err));
            }
          }
  });
  return suite;
}

SuiteResult basis_suite(std::size_t d, std::size_t branch) {
  const std::size_t expected = d * d * (d - branch);
  auto suite = named_suite(std::to_string(expected) + "-basis orthonormal (branch " +
                    std::to_string(branch) + ")");
  guarded(suite, "encoded_basis", [&] {
    const auto basis = encoded_basis(d, branch);
    ++suite.checks;
    if (basis.size() != expected) {
      fail(suite, "basis has " + std::to_string(basis.size()) + " states, expected " +
                      std::to_string(expected));
      return;
    }
    suite.checks += basis.size() * (basis.size() + 1) / 2;
    const double err = orthonormality_error(basis);
    if (err > kNormTol) fail(suite, "max |G - I| = " + format17(err));
  });
  return suite;
}

SuiteResult usim_suite(std::size_t d, const VerifyOptions& options) {
  auto suite = named_suite("usim-columns");
  for (const auto& spec : suite_specs(d, options)) {
    guarded(suite, "usim", [&] {
      const auto u = build_usim(spec);
      const auto x = spec.coeffs();
      // Independent route: the split state must be
      // sum_k sqrt(x_k^2 - x_{k-1}^2) sum_{s>=k} |sss>|k>.
      const auto split = apply_unitary(u, tensor_product(prepare_channel(spec), StateVector::ket(d, {0})),
                                       {kAlice, kAncilla});
      std::vector<Complex> amps(d * d * d * d);
      for (std::size_t k = 0; k < d; ++k) {
        const double lower = k == 0 ? 0.0 : x[k - 1] * x[k - 1];
        const double g = std::sqrt(std::max(0.0, x[k] * x[k] - lower));
        for (std::size_t s = k; s < d; ++s) amps[((s * d + s) * d + s) * d + k] = g;
      }
      ++suite.checks;
      const double err = max_abs_diff(split, StateVector({d, d, d, d}, std::move(amps)));
      if (err > kNormTol) fail(suite, "split state deviates by " + format17(err));

      for (std::size_t j = 0; j < d; ++j) {
        if (x[j] == 0.0) continue;
        ++suite.checks;
        const auto col = u.column(j * d);
        for (std::size_t a = 0; a < d; ++a) {
          const double lower = a == 0 ? 0.0 : x[a - 1] * x[a - 1];
          const double want = a <= j ? std::sqrt(std::max(0.0, x[a] * x[a] - lower)) / x[j] : 0.0;
          if (std::abs(col[j * d + a] - want) > kUnitarityTol)
            fail(suite, "column |" + std::to_string(j) + ",0> entry a=" + std::to_string(a) +
                            " is " + format17(col[j * d + a].real()));
        }
      }
      if (d == 3) {
        const auto ref = build_usim_reference(spec);
        for (std::size_t j = 0; j < d; ++j) {
          ++suite.checks;
          for (std::size_t r = 0; r < 9; ++r) {
            if (std::abs(u(r, j * d) - ref(r, j * d)) > kUnitarityTol)
              fail(suite, "closed-form reference disagrees on column |" + std::to_string(j) + ",0>");
          }
        }
      }
    });
  }
  return suite;
}

SuiteResult round_trip_suite(std::size_t d) {
  auto suite = named_suite("round-trip");
  for (std::size_t k = 0; k < d; ++k) {
    guarded(suite, "branch " + std::to_string(k), [&] {
      const auto basis = encoded_basis(d, k);
      const BranchOutcome branch{d, k, d - k, 1.0, branch_state(d, k)};
      for (std::size_t i = 0; i < basis.size(); ++i) {
        ++suite.checks;
        const auto msg = message_at(d, k, i);
        const auto got = decode(encode(branch, msg), d, k, basis);
        if (got.message != msg || std::abs(got.overlap - 1.0) > kNormTol) {
          fail(suite, "branch " + std::to_string(k) + " message (" + std::to_string(msg.m) + "," +
                          std::to_string(msg.t) + "," + std::to_string(msg.n) + ") decoded as (" +
                          std::to_string(got.message.m) + "," + std::to_string(got.message.t) +
                          "," + std::to_string(got.message.n) + ")");
        }
      }
    });
  }
  return suite;
}

}  // namespace

UnitaryMatrix weyl_negated_phase(std::size_t d, std::size_t shift, std::size_t phase) {
  const auto w = weyl(d, shift, phase);
  Matrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = std::conj(w(r, c));
  return UnitaryMatrix(std::move(m));
}

std::vector<SuiteResult> run_verification(std::size_t d, const VerifyOptions& options) {
  if (d < 2 || d > 8) throw RangeError("verification runs for d in [2, 8]");
  VerifyOptions opts = options;
  if (!opts.weyl) opts.weyl = [](std::size_t dd, std::size_t j, std::size_t k) { return weyl(dd, j, k); };

  std::vector<SuiteResult> out;
  out.push_back(unitarity_suite(d, opts));
  out.push_back(composition_suite(d, opts));
  for (std::size_t k = 0; k < d; ++k) out.push_back(basis_suite(d, k));
  out.push_back(usim_suite(d, opts));
  out.push_back(round_trip_suite(d));
  return out;
}

}  // namespace qdc
