// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>

#include "camgeom/rig/warps.hpp"

namespace camgeom {

namespace {

// Shared geometry for every rig warp. The reductions advertised in the
// header hold bitwise because all variants funnel into this one call.
WarpField rig_warp_core(const DepthMap& depth_from, const Rig& rig, int to, int from,
                        const Pose& ego_from, bool parallel) {
  rig.require_index(to, "rig warp");
  rig.require_index(from, "rig warp");
  const Pose rel =
      (to == from) ? ego_from : Pose(rig.relative_extrinsic(from, to) * ego_from);
  const CameraModel& cam_from = rig.cameras[from].model;
  const CameraModel& cam_to = rig.cameras[to].model;
  return parallel ? warp_coords(depth_from, rel, cam_from, cam_to)
                  : warp_coords_serial(depth_from, rel, cam_from, cam_to);
}

}  // namespace

WarpField warp_spatial(const DepthMap& depth_from, const Rig& rig, int from, int to) {
  return rig_warp_core(depth_from, rig, to, from, Pose::Identity(), true);
}

WarpField warp_spatial_serial(const DepthMap& depth_from, const Rig& rig, int from, int to) {
  return rig_warp_core(depth_from, rig, to, from, Pose::Identity(), false);
}

WarpField warp_spatiotemporal(const DepthMap& depth_from, const Rig& rig, int to, int from,
                              const Pose& ego_from) {
  return rig_warp_core(depth_from, rig, to, from, ego_from, true);
}

WarpField warp_spatiotemporal_serial(const DepthMap& depth_from, const Rig& rig, int to,
                                     int from, const Pose& ego_from) {
  return rig_warp_core(depth_from, rig, to, from, ego_from, false);
}

MaskImage nonoverlap_mask(const DepthMap& depth_from, const Pose& relative,
                          const CameraModel& cam_from, const CameraModel& cam_to) {
  const WarpField field = warp_coords(depth_from, relative, cam_from, cam_to);
  // Warp an all-ones context image and read it back with nearest-neighbor
  // sampling; a pixel overlaps iff the tap is in bounds and returns the 1.
  const ImageBuffer ones(field.width, field.height, 1.0);
  MaskImage mask(field.width, field.height, false);
  for (int y = 0; y < field.height; ++y) {
    for (int x = 0; x < field.width; ++x) {
      const size_t i = field.idx(y, x);
      if (!field.valid[i]) continue;
      const long nx = std::lround(field.u[i]);
      const long ny = std::lround(field.v[i]);
      if (nx < 0 || nx >= ones.width || ny < 0 || ny >= ones.height) continue;
      mask.set(y, x, ones.at(static_cast<int>(ny), static_cast<int>(nx), 0) == 1.0);
    }
  }
  return mask;
}

MaskImage nonoverlap_mask(const DepthMap& depth_from, const Rig& rig, int from, int to) {
  rig.require_index(from, "nonoverlap_mask");
  rig.require_index(to, "nonoverlap_mask");
  return nonoverlap_mask(depth_from, rig.relative_extrinsic(from, to),
                         rig.cameras[from].model, rig.cameras[to].model);
}

ScalarMap masked_photometric(const ScalarMap& loss, const MaskImage& nonoverlap,
                             const MaskImage& self_occlusion) {
  if (loss.width != nonoverlap.width || loss.height != nonoverlap.height ||
      loss.width != self_occlusion.width || loss.height != self_occlusion.height) {
    throw std::invalid_argument("masked_photometric: shape mismatch");
  }
  ScalarMap out(loss.width, loss.height);
  for (int y = 0; y < loss.height; ++y) {
    for (int x = 0; x < loss.width; ++x) {
      out.at(y, x) =
          (nonoverlap.at(y, x) && self_occlusion.at(y, x)) ? loss.at(y, x) : 0.0;
    }
  }
  return out;
}

}  // namespace camgeom
