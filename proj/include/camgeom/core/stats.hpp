// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace camgeom {

// Median with the midpoint rule for even counts. Partially sorts `values`
// in place.
inline double median_midpoint(std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("median_midpoint: empty sample");
  const size_t n = values.size();
  const size_t hi = n / 2;
  std::nth_element(values.begin(), values.begin() + hi, values.end());
  const double upper = values[hi];
  if (n % 2 == 1) return upper;
  std::nth_element(values.begin(), values.begin() + hi - 1, values.begin() + hi);
  return 0.5 * (values[hi - 1] + upper);
}

}  // namespace camgeom
