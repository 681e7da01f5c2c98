// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <vector>

#include "camgeom/photo/image.hpp"

namespace camgeom {

// Default working depth range (meters) for view synthesis.
constexpr double kDepthMin = 0.1;
constexpr double kDepthMax = 100.0;

// Default SSIM weight in the photometric loss.
constexpr double kSsimAlpha = 0.85;

// Default weight of the smoothness term in the total loss.
constexpr double kSmoothnessLambda = 0.001;

// Structural similarity per pixel: 3x3 uniform box statistics with reflect
// padding, C1 = 0.01^2, C2 = 0.03^2, computed per channel and averaged over
// channels. Values lie in [-1, 1].
ScalarMap ssim(const ImageBuffer& a, const ImageBuffer& b);

// Single-threaded reference; bitwise-identical to ssim().
ScalarMap ssim_serial(const ImageBuffer& a, const ImageBuffer& b);

// alpha * (1 - SSIM)/2 + (1 - alpha) * |target - synthesized|, the L1 part
// channel-averaged.
ScalarMap photometric_loss(const ImageBuffer& target, const ImageBuffer& synthesized,
                           double alpha = kSsimAlpha);

struct MinReprojection {
  ScalarMap loss;      // per-pixel minimum over contexts
  MaskImage automask;  // 0 where the best warped loss is not below the best
                       // unwarped loss (static / untextured pixels)
};

// Per-pixel minimum of the warped losses with the static-pixel auto-mask:
// a pixel survives only if min(warped) < min(original).
MinReprojection min_reprojection(const std::vector<ScalarMap>& warped_losses,
                                 const std::vector<ScalarMap>& original_losses);

// Edge-aware first-order smoothness: mean over valid pixels of
// |dx D| e^{-|dx I|} + |dy D| e^{-|dy I|} with forward differences; image
// gradients are channel-averaged before the exponent.
double smoothness(const DepthMap& depth, const ImageBuffer& image);

// mean(photometric over mask) + lambda_d * smooth. A null mask means all
// pixels; an all-zero mask contributes 0 for the photometric term.
double total_loss(const ScalarMap& photometric, const MaskImage* mask, double smooth,
                  double lambda_d = kSmoothnessLambda);

}  // namespace camgeom
