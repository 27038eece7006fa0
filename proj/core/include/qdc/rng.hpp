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

#ifndef QDC_RNG_HPP
#define QDC_RNG_HPP

#include <cstdint>
#include <random>

namespace qdc {

/// Seeded pseudorandom source. Owned by exactly one trial at a time.
///
/// Draws are built directly from std::mt19937_64 output rather than from the
/// standard distributions, whose algorithms are implementation-defined, so a
/// seed yields the same sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

/// Seed for trial `index` of a batch started from `base`, via the splitmix64
/// finalizer. Distinct indices give decorrelated streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace qdc

#endif  // QDC_RNG_HPP
