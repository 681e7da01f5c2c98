// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <stdexcept>

#include "camgeom/core/stats.hpp"
#include "camgeom/rig/pointcloud.hpp"

namespace camgeom {

PointCloud assemble_pointcloud(const Rig& rig, const std::vector<DepthMap>& depths,
                               const std::vector<ImageBuffer>& images) {
  if (depths.size() != static_cast<size_t>(rig.size()) || images.size() != depths.size()) {
    throw std::invalid_argument("assemble_pointcloud: per-camera input count mismatch");
  }
  PointCloud cloud;
  for (int ci = 0; ci < rig.size(); ++ci) {
    const DepthMap& d = depths[ci];
    const ImageBuffer& img = images[ci];
    if (img.width != d.width || img.height != d.height) {
      throw std::invalid_argument("assemble_pointcloud: image/depth shape mismatch");
    }
    const CameraModel& model = rig.cameras[ci].model;
    const Pose& X = rig.cameras[ci].extrinsic;
    for (int y = 0; y < d.height; ++y) {
      for (int x = 0; x < d.width; ++x) {
        if (!d.is_valid(y, x)) continue;
        const auto P = try_unproject(model, Pixel(x, y), d.at(y, x));
        if (!P) continue;
        cloud.points.push_back(X * (*P));
        cloud.colors.emplace_back(img.at(y, x, 0), img.at(y, x, 1), img.at(y, x, 2));
      }
    }
  }
  return cloud;
}

double shared_median_scale(const std::vector<DepthMap>& pred, const std::vector<DepthMap>& gt) {
  std::vector<double> pv, gv;
  for (const auto& d : pred) {
    for (size_t i = 0; i < d.depth.size(); ++i) {
      if (d.valid[i]) pv.push_back(d.depth[i]);
    }
  }
  for (const auto& d : gt) {
    for (size_t i = 0; i < d.depth.size(); ++i) {
      if (d.valid[i]) gv.push_back(d.depth[i]);
    }
  }
  if (pv.empty() || gv.empty()) {
    throw std::invalid_argument("shared_median_scale: no valid pixels");
  }
  const double mp = median_midpoint(pv);
  if (!(mp > 0.0)) throw std::invalid_argument("shared_median_scale: non-positive median");
  return median_midpoint(gv) / mp;
}

}  // namespace camgeom
