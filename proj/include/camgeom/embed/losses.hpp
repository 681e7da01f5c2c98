// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include "camgeom/photo/image.hpp"

namespace camgeom {

// Default view-synthesis (RGB) weight in the supervision loss.
constexpr double kSupervisionLambdaS = 5.0;
// Default weight of the virtual-view terms.
constexpr double kSupervisionLambdaV = 0.5;

// Mean |log d - log d_hat| over pixels valid in both maps. Throws when a
// selected depth is not positive or no pixel qualifies.
double depth_log_l1(const DepthMap& pred, const DepthMap& gt);

// Mean squared RGB error: per pixel the squared Euclidean norm over the 3
// channels, averaged over (optionally masked) pixels.
double rgb_squared_error(const ImageBuffer& pred, const ImageBuffer& gt,
                         const MaskImage* mask = nullptr);

// L = L_d + lambda_s L_s + lambda_v (L_dv + lambda_s L_sv) from
// already-computed terms.
double supervision_losses(double l_d, double l_s, double l_dv, double l_sv,
                          double lambda_s = kSupervisionLambdaS,
                          double lambda_v = kSupervisionLambdaV);

// Convenience form over maps. Virtual-view inputs may be null (terms 0);
// the virtual RGB error is masked by the virtual ground-truth depth's
// validity, since z-buffer projections are sparse.
double supervision_total(const DepthMap& pred_depth, const DepthMap& gt_depth,
                         const ImageBuffer& pred_rgb, const ImageBuffer& gt_rgb,
                         const DepthMap* vpred_depth, const DepthMap* vgt_depth,
                         const ImageBuffer* vpred_rgb, const ImageBuffer* vgt_rgb,
                         double lambda_s = kSupervisionLambdaS,
                         double lambda_v = kSupervisionLambdaV);

}  // namespace camgeom
