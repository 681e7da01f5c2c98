// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include "camgeom/photo/warp.hpp"
#include "camgeom/rig/rig.hpp"

namespace camgeom {

// Cross-camera warp at one timestep: for camera `from`'s depth, where does
// each of its pixels land in camera `to`'s image?
// p_hat = pi_to(X_{from->to} * phi_from(p, d)).
WarpField warp_spatial(const DepthMap& depth_from, const Rig& rig, int from, int to);
WarpField warp_spatial_serial(const DepthMap& depth_from, const Rig& rig, int from, int to);

// Cross-camera warp across timesteps: camera `from`'s depth at time t,
// moved by that camera's predicted ego-motion `ego_from` (t -> context
// timestep), then across the rig into camera `to`:
// p_hat = pi_to(X_{from->to} * ego_from * phi_from(p, d)).
// With ego = identity this is warp_spatial(depth, rig, from, to) bitwise;
// with to == from it is the single-camera temporal warp
// warp_coords(depth, ego, cam_from, cam_from) bitwise.
WarpField warp_spatiotemporal(const DepthMap& depth_from, const Rig& rig, int to, int from,
                              const Pose& ego_from);
WarpField warp_spatiotemporal_serial(const DepthMap& depth_from, const Rig& rig, int to, int from,
                                     const Pose& ego_from);

// Warps an all-ones image by the same geometry with nearest-neighbor
// sampling; true where the warped value is 1 and in bounds. Pixels with
// invalid depth are false.
MaskImage nonoverlap_mask(const DepthMap& depth_from, const Rig& rig, int from, int to);
MaskImage nonoverlap_mask(const DepthMap& depth_from, const Pose& relative,
                          const CameraModel& cam_from, const CameraModel& cam_to);

// L_p element-multiplied by both masks (zero where either mask is off).
ScalarMap masked_photometric(const ScalarMap& loss, const MaskImage& nonoverlap,
                             const MaskImage& self_occlusion);

}  // namespace camgeom
