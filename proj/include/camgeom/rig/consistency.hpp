// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <vector>

#include "camgeom/rig/rig.hpp"

namespace camgeom {

// Re-expresses camera i's predicted motion in camera j's frame through the
// rig extrinsics: X_tilde = X_j^{-1} * X_i * pred * X_i^{-1} * X_j. When
// all cameras ride one rigid body, this is the same pose for every i.
Pose to_canonical(const Pose& pred_i, const Rig& rig, int i, int j);

struct PoseConsistency {
  double t_loss = 0.0;
  double r_loss = 0.0;
  double combined = 0.0;
};

// Consistency of per-camera motion predictions against camera 0's:
// t_loss sums squared translation differences, r_loss sums squared
// wrapped intrinsic-XYZ Euler-angle differences, after re-expressing each
// prediction in camera 0's frame.
PoseConsistency pose_consistency_losses(const std::vector<Pose>& preds, const Rig& rig,
                                        double alpha_t = 1.0, double alpha_r = 1.0);

}  // namespace camgeom
