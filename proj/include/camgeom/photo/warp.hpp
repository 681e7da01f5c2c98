// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include "camgeom/camera/models.hpp"
#include "camgeom/core/pose.hpp"
#include "camgeom/photo/image.hpp"

namespace camgeom {

struct SampledImage {
  ImageBuffer image;  // zeros where invalid
  MaskImage mask;
};

// View-synthesis warp: for each target pixel p with depth d, lift through the
// target camera (phi_t), move by `pose` (target frame -> context frame), and
// project through the context camera: p_hat = pi_c(R * phi_t(p, d) + t).
// Pixels with invalid depth, a lift/projection domain violation, or an
// out-of-bounds landing are flagged invalid. Bounds are those of the context
// image, assumed to share the target's size unless `ctx_width/height` given.
WarpField warp_coords(const DepthMap& depth, const Pose& pose, const CameraModel& cam_t,
                      const CameraModel& cam_c, int ctx_width = -1, int ctx_height = -1);

// Single-threaded reference; bitwise-identical to warp_coords().
WarpField warp_coords_serial(const DepthMap& depth, const Pose& pose, const CameraModel& cam_t,
                             const CameraModel& cam_c, int ctx_width = -1, int ctx_height = -1);

// One bilinear tap with strict bounds [0, W-1] x [0, H-1]; writes
// `src.channels` values into `out`. Returns false (out untouched) when
// (x, y) is outside the valid interpolation square.
bool sample_bilinear_at(const ImageBuffer& src, double x, double y, double* out);

// Bilinear resampling of `src` at the warp field's coordinates; invalid or
// out-of-bounds taps produce zeros with mask 0.
SampledImage sample_bilinear(const ImageBuffer& src, const WarpField& field);

// Single-threaded reference; bitwise-identical to sample_bilinear().
SampledImage sample_bilinear_serial(const ImageBuffer& src, const WarpField& field);

// warp_coords + sample_bilinear in one call: the context image as seen from
// the target view under the given depth and relative pose.
SampledImage synthesize_view(const ImageBuffer& context, const DepthMap& depth, const Pose& pose,
                             const CameraModel& cam_t, const CameraModel& cam_c);

}  // namespace camgeom
