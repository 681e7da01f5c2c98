// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <Eigen/Core>

namespace camgeom {

// Frequency counts for the origin / ray-direction encodings and the maximum
// resolution mu; frequencies are spaced equally in [1, mu/2].
struct FourierConfig {
  int K_o = 20;
  int K_r = 10;
  double mu = 60.0;
};

// Dimension-wise positional encoding: each entry x becomes
// [x, sin(f_1 pi x), cos(f_1 pi x), ..., sin(f_K pi x), cos(f_K pi x)]
// with f_k equally spaced in [1, mu/2] (K = 1 uses f = 1). Output length
// d * (2K + 1), dimension-major.
Eigen::VectorXd fourier_encode(const Eigen::VectorXd& x, int K, double mu);

// Encoded length of a d-vector at frequency count K.
inline int fourier_size(int d, int K) { return d * (2 * K + 1); }

}  // namespace camgeom
