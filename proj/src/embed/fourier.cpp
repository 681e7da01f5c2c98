// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <stdexcept>

#include "camgeom/embed/fourier.hpp"

namespace camgeom {

Eigen::VectorXd fourier_encode(const Eigen::VectorXd& x, int K, double mu) {
  if (K < 0) throw std::invalid_argument("fourier_encode: K must be >= 0");
  if (K > 0 && !(mu >= 2.0)) throw std::invalid_argument("fourier_encode: mu must be >= 2");
  const int d = static_cast<int>(x.size());
  Eigen::VectorXd out(fourier_size(d, K));
  int o = 0;
  for (int i = 0; i < d; ++i) {
    out(o++) = x(i);
    for (int k = 0; k < K; ++k) {
      const double f =
          (K == 1) ? 1.0 : 1.0 + (mu / 2.0 - 1.0) * static_cast<double>(k) / (K - 1);
      const double a = f * M_PI * x(i);
      out(o++) = std::sin(a);
      out(o++) = std::cos(a);
    }
  }
  return out;
}

}  // namespace camgeom
