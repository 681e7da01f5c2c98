// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <stdexcept>

#include "camgeom/embed/virtual_view.hpp"

namespace camgeom {

Pose virtual_camera(const Pose& base, const PointCloud& cloud, const AugmentConfig& cfg,
                    std::mt19937_64& rng) {
  if (cloud.points.empty()) throw std::invalid_argument("virtual_camera: empty cloud");
  std::normal_distribution<double> noise(0.0, cfg.sigma_v);
  Point3 position = -(base.R.transpose() * base.t);  // camera center of a world-to-camera pose
  for (int k = 0; k < 3; ++k) position(k) += cfg.sigma_v > 0.0 ? noise(rng) : 0.0;

  Point3 centroid = Point3::Zero();
  for (const auto& p : cloud.points) centroid += p;
  centroid /= static_cast<double>(cloud.points.size());
  for (int k = 0; k < 3; ++k) centroid(k) += cfg.sigma_v > 0.0 ? noise(rng) : 0.0;

  return look_at_pose(position, centroid);
}

VirtualProjection project_to_virtual(const PointCloud& cloud, const PinholeParams& K,
                                     const Pose& cam, int W, int H) {
  if (W <= 0 || H <= 0) throw std::invalid_argument("project_to_virtual: empty image");
  const CameraModel model(K);
  VirtualProjection out;
  out.depth = DepthMap(W, H);
  out.image = ImageBuffer(W, H, 0.0);
  for (size_t i = 0; i < cloud.points.size(); ++i) {
    const Point3 Pc = cam * cloud.points[i];
    const auto px = try_project(model, Pc);
    if (!px) continue;
    const long x = std::lround(px->x());
    const long y = std::lround(px->y());
    if (x < 0 || x >= W || y < 0 || y >= H) continue;
    const int xi = static_cast<int>(x), yi = static_cast<int>(y);
    const double z = Pc.z();
    if (out.depth.is_valid(yi, xi) && out.depth.at(yi, xi) <= z) continue;
    out.depth.set(yi, xi, z);
    for (int c = 0; c < 3; ++c) out.image.at(yi, xi, c) = cloud.colors[i](c);
  }
  return out;
}

std::vector<Pose> canonical_jitter(const std::vector<Pose>& extrinsics,
                                   const AugmentConfig& cfg, std::mt19937_64& rng) {
  if (extrinsics.empty()) throw std::invalid_argument("canonical_jitter: no poses");
  std::normal_distribution<double> nt(0.0, cfg.sigma_t);
  std::normal_distribution<double> nr(0.0, cfg.sigma_r);
  Pose T0 = Pose::Identity();
  for (int k = 0; k < 3; ++k) T0.t(k) = cfg.sigma_t > 0.0 ? nt(rng) : 0.0;
  Eigen::Vector3d euler = Eigen::Vector3d::Zero();
  for (int k = 0; k < 3; ++k) euler(k) = cfg.sigma_r > 0.0 ? nr(rng) : 0.0;
  T0.R = rotation_from_euler_xyz(euler);

  std::vector<Pose> out;
  out.reserve(extrinsics.size());
  for (const auto& T : extrinsics) out.push_back(T0 * T);
  return out;
}

std::vector<Pose> canonical_randomize(const std::vector<Pose>& extrinsics,
                                      std::mt19937_64& rng) {
  if (extrinsics.empty()) throw std::invalid_argument("canonical_randomize: no poses");
  std::uniform_int_distribution<int> pick(0, static_cast<int>(extrinsics.size()) - 1);
  const Pose inv = extrinsics[static_cast<size_t>(pick(rng))].inverse();
  std::vector<Pose> out;
  out.reserve(extrinsics.size());
  for (const auto& T : extrinsics) out.push_back(T * inv);
  return out;
}

}  // namespace camgeom
