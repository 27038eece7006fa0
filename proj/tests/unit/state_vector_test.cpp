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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qdc/errors.hpp"
#include "qdc/operators.hpp"

namespace qdc {
namespace {

constexpr double kTight = 1e-12;

// sum_j x_j |jjj> over three qutrits.
StateVector channel3(double x0, double x1, double x2) {
  std::vector<Complex> amps(27);
  amps[0] = x0;
  amps[13] = x1;
  amps[26] = x2;
  return StateVector({3, 3, 3}, std::move(amps));
}

// The split state written out directly:
//   x0 (|000>+|111>+|222>)|0> + g1 (|111>+|222>)|1> + g2 |222>|2>.
StateVector split_state3(double x0, double x1, double x2) {
  const double g1 = std::sqrt(x1 * x1 - x0 * x0);
  const double g2 = std::sqrt(x2 * x2 - x1 * x1);
  std::vector<Complex> amps(81);
  for (std::size_t s = 0; s < 3; ++s) amps[((s * 3 + s) * 3 + s) * 3 + 0] = x0;
  for (std::size_t s = 1; s < 3; ++s) amps[((s * 3 + s) * 3 + s) * 3 + 1] = g1;
  amps[((2 * 3 + 2) * 3 + 2) * 3 + 2] = g2;
  return StateVector({3, 3, 3, 3}, std::move(amps));
}

TEST(StateVector, RejectsBadShapes) {
  EXPECT_THROW(StateVector({3, 3}, std::vector<Complex>(8)), DimensionError);
  EXPECT_THROW(StateVector({1, 3}, std::vector<Complex>(3)), DimensionError);
  EXPECT_THROW(StateVector({}, {}), DimensionError);
}

TEST(StateVector, BigEndianLabels) {
  const auto s = StateVector::ket(3, {1, 2, 0});
  EXPECT_EQ(s[1 * 9 + 2 * 3 + 0], Complex{1.0});
  EXPECT_EQ(s.digits_of(15), (std::vector<std::size_t>{1, 2, 0}));
}

TEST(TensorProduct, BasisKets) {
  const auto s = tensor_product(StateVector::ket(3, {0}), StateVector::ket(3, {0}));
  EXPECT_EQ(s.dims(), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(s.size(), 9u);
  EXPECT_EQ(s[0], Complex{1.0});
  for (std::size_t i = 1; i < 9; ++i) EXPECT_EQ(s[i], Complex{});
}

TEST(TensorProduct, Distributivity) {
  const StateVector a({3}, {0.4, 0.5, std::sqrt(0.59)});
  const auto s = tensor_product(a, StateVector::ket(3, {0}));
  EXPECT_EQ(s.amplitude({1, 0}), Complex{0.5});
  EXPECT_EQ(s.amplitude({1, 1}), Complex{});
}

TEST(TensorProduct, ChannelWithAncilla) {
  const double x2 = std::sqrt(0.59);
  const auto s = tensor_product(channel3(0.4, 0.5, x2), StateVector::ket(3, {0}));
  for (std::size_t label = 0; label < s.size(); ++label) {
    const auto digits = s.digits_of(label);
    const bool ghz = digits[0] == digits[1] && digits[1] == digits[2] && digits[3] == 0;
    if (!ghz) EXPECT_EQ(s[label], Complex{}) << label;
  }
  EXPECT_EQ(s.amplitude({2, 2, 2, 0}), Complex{x2});
  EXPECT_EQ(s.amplitude({0, 0, 0, 0}), Complex{0.4});
  EXPECT_EQ(s.amplitude({1, 1, 1, 0}), Complex{0.5});
}

TEST(ApplyUnitary, IdentityLeavesStateUnchanged) {
  std::mt19937_64 gen(5);
  const auto s = testing::random_state({3, 3, 3}, gen);
  EXPECT_EQ(apply_unitary(UnitaryMatrix::identity(9), s, {0, 2}), s);
}

TEST(ApplyUnitary, ShiftOnBob) {
  const auto s = apply_unitary(weyl(3, 1, 0), StateVector::ket(3, {0, 0, 0}), {1});
  EXPECT_LE(max_abs_diff(s, StateVector::ket(3, {0, 1, 0})), kTight);
}

TEST(ApplyUnitary, SplittingUnitaryReproducesBranchDecomposition) {
  const double x0 = 0.4, x1 = 0.5, x2 = std::sqrt(0.59);
  const ChannelSpec spec(3, {x0, x1, x2});
  const auto attached = tensor_product(channel3(x0, x1, x2), StateVector::ket(3, {0}));
  const auto split = apply_unitary(build_usim_reference(spec), attached, {0, 3});
  EXPECT_LE(max_abs_diff(split, split_state3(x0, x1, x2)), kTight);
}

TEST(ApplyUnitary, MatchesBruteForceEmbedding) {
  std::mt19937_64 gen(7);
  const std::vector<std::vector<std::size_t>> target_sets{{0}, {2}, {1, 0}, {0, 3}, {3, 1, 2}};
  for (const auto& targets : target_sets) {
    const std::vector<std::size_t> dims{2, 3, 2, 3};
    std::size_t sub = 1;
    for (auto t : targets) sub *= dims[t];
    const auto u = testing::random_unitary(sub, gen);
    const auto s = testing::random_state(dims, gen);
    const auto got = apply_unitary(u, s, targets);
    const auto want = testing::mat_vec(testing::embed_operator(u.matrix(), dims, targets), s.amps());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_LE(std::abs(got[i] - want[i]), kTight);
  }
}

TEST(ApplyUnitary, PreservesNormProperty) {
  std::mt19937_64 gen(2026);
  std::uniform_int_distribution<std::size_t> pick_d(2, 5);
  std::uniform_int_distribution<std::size_t> pick_regs(1, 3);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = pick_d(gen);
    const std::size_t regs = pick_regs(gen);
    const std::size_t target = std::uniform_int_distribution<std::size_t>(0, regs - 1)(gen);
    const auto s = testing::random_state(std::vector<std::size_t>(regs, d), gen);
    const auto u = testing::random_unitary(d, gen);
    const auto out = apply_unitary(u, s, {target});
    worst = std::max(worst, std::abs(out.norm() - 1.0));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(ApplyUnitary, RejectsBadTargets) {
  const auto s = StateVector::ket(3, {0, 0});
  EXPECT_THROW(apply_unitary(UnitaryMatrix::identity(9), s, {0}), DimensionError);
  EXPECT_THROW(apply_unitary(UnitaryMatrix::identity(9), s, {0, 0}), DimensionError);
  EXPECT_THROW(apply_unitary(UnitaryMatrix::identity(3), s, {2}), DimensionError);
}

TEST(InnerProduct, NormalizedSelfOverlapIsOne) {
  std::mt19937_64 gen(9);
  const auto s = testing::random_state({3, 3, 3}, gen);
  EXPECT_NEAR(std::abs(inner_product(s, s) - 1.0), 0.0, kTight);
}

TEST(InnerProduct, EncodedStatesAreOrthogonal) {
  const double r3 = 1.0 / std::sqrt(3.0);
  std::vector<Complex> a(27), b(27);
  for (std::size_t s = 0; s < 3; ++s) a[s * 13] = r3;                   // |000>+|111>+|222>
  for (std::size_t s = 0; s < 3; ++s) b[s * 9 + ((s + 1) % 3) * 3 + s] = r3;  // |010>+|121>+|202>
  EXPECT_LE(std::abs(inner_product(StateVector({3, 3, 3}, a), StateVector({3, 3, 3}, b))), kTight);

  const double r2 = 1.0 / std::sqrt(2.0);
  std::vector<Complex> plus(27), minus(27);
  plus[13] = r2;
  plus[26] = r2;
  minus[13] = r2;
  minus[26] = -r2;
  EXPECT_LE(std::abs(inner_product(StateVector({3, 3, 3}, plus), StateVector({3, 3, 3}, minus))),
            kTight);
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
  const StateVector a({2}, {Complex{0, 1}, 0.0});
  const StateVector b({2}, {1.0, 0.0});
  EXPECT_EQ(inner_product(a, b), Complex(0, -1));
  EXPECT_THROW(inner_product(a, StateVector::ket(3, {0})), DimensionError);
}

TEST(InnerProduct, CauchySchwarzProperty) {
  std::mt19937_64 gen(13);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing::random_state({4, 2}, gen);
    const auto b = testing::random_state({4, 2}, gen);
    EXPECT_LE(std::abs(inner_product(a, b)), a.norm() * b.norm() + kTight);
  }
}

TEST(MeasureRegister, AncillaDistributionOfSplitState) {
  const double x0 = 0.4, x1 = 0.5, x2 = std::sqrt(0.59);
  const auto probs = register_distribution(split_state3(x0, x1, x2), 3);
  EXPECT_NEAR(probs[0], 3 * x0 * x0, 1e-10);
  EXPECT_NEAR(probs[1], 2 * (x1 * x1 - x0 * x0), 1e-10);
  EXPECT_NEAR(probs[2], x2 * x2 - x1 * x1, 1e-10);

  Rng rng(1);
  const auto outcome = measure_register(split_state3(x0, x1, x2), 3, rng);
  EXPECT_NEAR(outcome.probability, probs[outcome.index], 1e-10);
  EXPECT_TRUE(outcome.post_state.is_normalized());
}

TEST(MeasureRegister, EigenstateIsUnchanged) {
  const auto s = StateVector::ket(3, {2, 1});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto outcome = measure_register(s, 1, rng);
    EXPECT_EQ(outcome.index, 1u);
    EXPECT_EQ(outcome.probability, 1.0);
    EXPECT_EQ(outcome.post_state, s);
  }
}

TEST(MeasureRegister, ZeroNormIsAnError) {
  Rng rng(0);
  EXPECT_THROW(measure_register(StateVector::zero({3, 3}), 0, rng), MeasurementError);
}

TEST(MeasureRegister, SameSeedSameOutcome) {
  const auto s = split_state3(0.4, 0.5, std::sqrt(0.59));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng a(seed), b(seed);
    EXPECT_EQ(measure_register(s, 3, a).index, measure_register(s, 3, b).index);
  }
}

TEST(MeasureRegister, TensorThenMeasureFactorizes) {
  std::mt19937_64 gen(17);
  for (int i = 0; i < 20; ++i) {
    const auto a = testing::random_state({3, 2}, gen);
    const auto b = testing::random_state({4}, gen);
    const auto probs = register_distribution(tensor_product(a, b), 2);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(probs[k], std::norm(b[k]), 1e-15);
  }
}

TEST(MeasureRegister, FrequenciesWithinFiveSigma) {
  const double x0 = 0.4, x1 = 0.5, x2 = std::sqrt(0.59);
  const auto s = split_state3(x0, x1, x2);
  const std::vector<double> expected{3 * x0 * x0, 2 * (x1 * x1 - x0 * x0), x2 * x2 - x1 * x1};
  constexpr int kTrials = 100000;
  std::vector<int> counts(3, 0);
  Rng rng(424242);
  for (int i = 0; i < kTrials; ++i) ++counts[measure_register(s, 3, rng).index];
  for (std::size_t k = 0; k < 3; ++k) {
    const double freq = static_cast<double>(counts[k]) / kTrials;
    EXPECT_LE(std::abs(freq - expected[k]), 5 * testing::binomial_se(expected[k], kTrials)) << k;
  }
}

TEST(SliceRegister, DropsRegisterAndRenormalizes) {
  const auto s = split_state3(0.4, 0.5, std::sqrt(0.59));
  const auto slice = slice_register(s, 3, 1);
  EXPECT_EQ(slice.dims(), (std::vector<std::size_t>{3, 3, 3}));
  const double r2 = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(slice.amplitude({1, 1, 1}).real(), r2, kTight);
  EXPECT_NEAR(slice.amplitude({2, 2, 2}).real(), r2, kTight);
  EXPECT_TRUE(slice.is_normalized());
}

TEST(ProjectOntoBasis, MemberOfBasis) {
  std::vector<StateVector> basis;
  for (std::size_t i = 0; i < 4; ++i) basis.push_back(StateVector::ket(4, {i}));
  const auto hit = project_onto_basis(basis[2], basis);
  EXPECT_EQ(hit.index, 2u);
  EXPECT_NEAR(hit.overlap, 1.0, kTight);
}

TEST(ProjectOntoBasis, EncodedStateFindsItself) {
  const auto basis = encoded_basis(3, 0);
  // U_00 on A, U_20 on B: message (m, t, n) = (0, 0, 2).
  const auto s = encoded_state(3, 0, {0, 0, 2});
  const auto hit = project_onto_basis(s, basis);
  EXPECT_EQ(hit.index, message_index(3, 0, {0, 0, 2}));
  EXPECT_NEAR(hit.overlap, 1.0, 1e-10);
}

TEST(ProjectOntoBasis, OrthogonalStateIsDiagnosed) {
  const std::vector<StateVector> basis{StateVector::ket(3, {0}), StateVector::ket(3, {1})};
  try {
    project_onto_basis(StateVector::ket(3, {2}), basis);
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.best_overlap(), 0.0);
  }
  EXPECT_THROW(project_onto_basis(StateVector::ket(3, {2}), {}), DimensionError);
}

TEST(ProjectOntoBasis, BestOverlapIsBruteForceArgmax) {
  std::mt19937_64 gen(19);
  const auto basis = encoded_basis(3, 1);
  for (int i = 0; i < 100; ++i) {
    const auto s = testing::random_state({3, 3, 3}, gen);
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Complex acc{};
      for (std::size_t l = 0; l < s.size(); ++l) acc += std::conj(basis[j][l]) * s[l];
      if (std::abs(acc) > best) {
        best = std::abs(acc);
        arg = j;
      }
    }
    const auto hit = best_overlap(s, basis);
    EXPECT_EQ(hit.index, arg);
    EXPECT_NEAR(hit.overlap, best, kTight);
  }
}

TEST(Serialization, RoundTripProperty) {
  std::mt19937_64 gen(23);
  for (int i = 0; i < 50; ++i) {
    const auto s = testing::random_state({2, 3, 2}, gen);
    EXPECT_EQ(parse_state(serialize_state(s)), s);
  }
  EXPECT_EQ(serialize_state(StateVector::ket(2, {1})), "{\"dims\":[2],\"amps\":[[0,0],[1,0]]}");
  EXPECT_THROW(parse_state("{\"dims\":[2]}"), ParseError);
}

}  // namespace
}  // namespace qdc
