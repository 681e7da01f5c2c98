// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <vector>

#include "camgeom/rig/rig.hpp"

namespace camgeom {

// Lifts every valid depth pixel of every camera through its model, moves it
// into the canonical frame with the camera's extrinsic, and concatenates,
// carrying the pixel's color. Cameras are visited in order, pixels row-major.
PointCloud assemble_pointcloud(const Rig& rig, const std::vector<DepthMap>& depths,
                               const std::vector<ImageBuffer>& images);

// Single scale factor shared by all cameras:
// median of all valid ground-truth depths / median of all valid predictions,
// each median over the concatenation across cameras. Throws when either
// side has no valid pixels.
double shared_median_scale(const std::vector<DepthMap>& pred, const std::vector<DepthMap>& gt);

}  // namespace camgeom
