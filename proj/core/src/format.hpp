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

#ifndef QDC_SRC_FORMAT_HPP
#define QDC_SRC_FORMAT_HPP

#include <cstdio>
#include <string>

#include "qdc/matrix.hpp"

namespace qdc::detail {

inline std::string format17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

inline void append_pair(std::string& out, const Complex& z) {
  out += '[';
  out += format17(z.real());
  out += ',';
  out += format17(z.imag());
  out += ']';
}

}  // namespace qdc::detail

#endif  // QDC_SRC_FORMAT_HPP
