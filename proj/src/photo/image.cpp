// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <algorithm>
#include <cmath>

#include "camgeom/photo/image.hpp"

namespace camgeom {

void clamp_unit(ImageBuffer& image) {
  for (double& v : image.data) v = std::clamp(v, 0.0, 1.0);
}

double mean_abs_diff(const ImageBuffer& a, const ImageBuffer& b) {
  require_same_shape(a, b, "mean_abs_diff");
  if (a.data.empty()) return 0.0;
  double sum = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) sum += std::abs(a.data[i] - b.data[i]);
  return sum / static_cast<double>(a.data.size());
}

}  // namespace camgeom
