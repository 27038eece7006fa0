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

// Qutrit operator tables typed out entry by entry. Shared by the unit tests
// and the acceptance gate.

#ifndef QDC_TESTS_FIXTURES_HPP
#define QDC_TESTS_FIXTURES_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "oracles.hpp"
#include "qdc/matrix.hpp"

namespace qdc::testing {

struct LabeledMatrix {
  std::size_t first;   // shift
  std::size_t second;  // phase
  Matrix value;
};

/// The nine qutrit shift/clock operations U_{jk}.
inline std::vector<LabeledMatrix> qutrit_weyl_table() {
  const Complex o = 0.0, l = 1.0, w = omega3(1), w2 = omega3(2);
  return {
      {0, 0, matrix_from_rows({{l, o, o}, {o, l, o}, {o, o, l}})},
      {0, 1, matrix_from_rows({{l, o, o}, {o, w, o}, {o, o, w2}})},
      {0, 2, matrix_from_rows({{l, o, o}, {o, w2, o}, {o, o, w}})},
      {1, 0, matrix_from_rows({{o, o, l}, {l, o, o}, {o, l, o}})},
      {1, 1, matrix_from_rows({{o, o, w2}, {l, o, o}, {o, w, o}})},
      {1, 2, matrix_from_rows({{o, o, w}, {l, o, o}, {o, w2, o}})},
      {2, 0, matrix_from_rows({{o, l, o}, {o, o, l}, {l, o, o}})},
      {2, 1, matrix_from_rows({{o, w, o}, {o, o, w2}, {l, o, o}})},
      {2, 2, matrix_from_rows({{o, w2, o}, {o, o, w}, {l, o, o}})},
  };
}

/// The six operations available on the two-term branch, U'_{mt}.
inline std::vector<LabeledMatrix> qutrit_two_term_table() {
  const Complex o = 0.0, l = 1.0, n = -1.0;
  return {
      {0, 0, matrix_from_rows({{l, o, o}, {o, l, o}, {o, o, l}})},
      {0, 1, matrix_from_rows({{l, o, o}, {o, l, o}, {o, o, n}})},
      {1, 0, matrix_from_rows({{o, o, l}, {l, o, o}, {o, l, o}})},
      {1, 1, matrix_from_rows({{o, o, n}, {l, o, o}, {o, l, o}})},
      {2, 0, matrix_from_rows({{o, l, o}, {o, o, l}, {l, o, o}})},
      {2, 1, matrix_from_rows({{o, l, o}, {o, o, n}, {l, o, o}})},
  };
}

/// The three shifts available on the product branch, U''_{m0}.
inline std::vector<LabeledMatrix> qutrit_product_table() {
  const Complex o = 0.0, l = 1.0;
  return {
      {0, 0, matrix_from_rows({{l, o, o}, {o, l, o}, {o, o, l}})},
      {1, 0, matrix_from_rows({{o, o, l}, {l, o, o}, {o, l, o}})},
      {2, 0, matrix_from_rows({{o, l, o}, {o, o, l}, {l, o, o}})},
  };
}

/// The 9x9 qutrit splitting unitary on (A, a) written from its closed-form
/// parameters. Requires 0 < x0 <= x1 <= x2.
inline Matrix qutrit_usim_closed_form(double x0, double x1, double x2) {
  const double big_m = std::sqrt((x2 * x2 - x1 * x1) / (x2 * x2));
  const double big_n = std::sqrt((x1 * x1 - x0 * x0) / (x2 * x2));
  const double m = std::sqrt(1.0 - x0 * x0 / (x1 * x1));
  const double m01 = x0 / x1;
  const double m02 = x0 / x2;
  const Complex o = 0.0, l = 1.0;
  return matrix_from_rows({
      {l, o, o, o, o, o, o, o, o},
      {o, l, o, o, o, o, o, o, o},
      {o, o, l, o, o, o, o, o, o},
      {o, o, o, m01, m, o, o, o, o},
      {o, o, o, m, -m01, o, o, o, o},
      {o, o, o, o, o, m02, o, big_m, -big_n},
      {o, o, o, o, o, o, m02, big_n, big_m},
      {o, o, o, o, o, big_m, big_n, -m02, o},
      {o, o, o, o, o, -big_n, big_m, o, -m02},
  });
}

}  // namespace qdc::testing

#endif  // QDC_TESTS_FIXTURES_HPP
