// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/synth/scene.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace camgeom {

namespace {

constexpr double kRayEps = 1e-9;

// Casts the camera-frame ray of `px` into the world and reports the model's
// depth value for a world point (plane depth vs Euclidean range).
struct RayCaster {
  const CameraModel& model;
  Pose pose;              // world -> camera
  Point3 center;          // camera position in world coordinates
  Eigen::Matrix3d R_wc;   // camera -> world rotation

  RayCaster(const CameraModel& m, const Pose& world_to_camera)
      : model(m), pose(world_to_camera), center(-(world_to_camera.R.transpose() * world_to_camera.t)),
        R_wc(world_to_camera.R.transpose()) {}

  bool world_ray(const Pixel& px, Point3& dir_world) const {
    const auto d = try_unproject(model, px, 1.0);
    if (!d) return false;
    dir_world = R_wc * *d;
    return true;
  }

  double depth_of(const Point3& P_world) const {
    const Point3 P_cam = pose * P_world;
    return depth_is_range(model) ? P_cam.norm() : P_cam.z();
  }
};

}  // namespace

Point3 procedural_texture(double a, double b) {
  return Point3(0.5 + 0.30 * std::sin(1.3 * a + 2.1 * b) + 0.18 * std::cos(2.9 * a - 1.1 * b),
                0.5 + 0.28 * std::sin(2.3 * a - 1.7 * b + 0.5) +
                    0.20 * std::cos(1.1 * a + 3.3 * b),
                0.5 + 0.26 * std::sin(3.1 * a + 1.9 * b + 1.0) +
                    0.22 * std::cos(2.2 * a - 2.6 * b + 0.7));
}

RenderedView render_plane(const CameraModel& model, const Pose& world_to_camera, int width,
                          int height, const PlaneSceneConfig& scene) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("render_plane: empty image");
  validate(model);
  RayCaster caster(model, world_to_camera);
  RenderedView view{ImageBuffer(width, height), DepthMap(width, height)};
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      Point3 w;
      if (!caster.world_ray(Pixel(x, y), w)) continue;
      const double dz = w.z();
      if (std::abs(dz) < kRayEps) continue;
      const double s = (scene.plane_z - caster.center.z()) / dz;
      if (s <= kRayEps) continue;
      const Point3 P = caster.center + s * w;
      const Point3 rgb =
          procedural_texture(scene.texture_scale * P.x(), scene.texture_scale * P.y());
      for (int c = 0; c < 3; ++c) view.image.at(y, x, c) = rgb(c);
      view.depth.set(y, x, caster.depth_of(P));
    }
  return view;
}

RenderedView render_box(const CameraModel& model, const Pose& world_to_camera, int width,
                        int height, const BoxSceneConfig& scene) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("render_box: empty image");
  validate(model);
  RayCaster caster(model, world_to_camera);
  const Point3 rel = caster.center - scene.center;
  if (rel.cwiseAbs().maxCoeff() >= scene.half)
    throw std::invalid_argument("render_box: viewpoint must lie inside the box");

  // Face tints: +x -x +y -y +z -z.
  static const Point3 kTint[6] = {{1.0, 0.6, 0.6}, {0.6, 1.0, 0.6}, {0.6, 0.6, 1.0},
                                  {1.0, 1.0, 0.6}, {1.0, 0.6, 1.0}, {0.6, 1.0, 1.0}};

  RenderedView view{ImageBuffer(width, height), DepthMap(width, height)};
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      Point3 w;
      if (!caster.world_ray(Pixel(x, y), w)) continue;
      double best_s = -1.0;
      int best_face = -1;
      for (int axis = 0; axis < 3; ++axis)
        for (int sign = 0; sign < 2; ++sign) {
          const double target = (sign == 0 ? scene.half : -scene.half);
          if (std::abs(w(axis)) < kRayEps) continue;
          const double s = (target - rel(axis)) / w(axis);
          if (s <= kRayEps || (best_s > 0.0 && s >= best_s)) continue;
          const Point3 q = rel + s * w;
          const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
          if (std::abs(q(a1)) <= scene.half + 1e-9 && std::abs(q(a2)) <= scene.half + 1e-9) {
            best_s = s;
            best_face = 2 * axis + sign;
          }
        }
      if (best_face < 0) continue;
      const Point3 P = scene.center + rel + best_s * w;
      const int axis = best_face / 2;
      const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
      const Point3 tex = procedural_texture(scene.texture_scale * P(a1) * 1.7,
                                            scene.texture_scale * P(a2) * 1.7);
      for (int c = 0; c < 3; ++c)
        view.image.at(y, x, c) = 0.75 * tex(c) * kTint[best_face](c) + 0.1;
      view.depth.set(y, x, caster.depth_of(P));
    }
  return view;
}

SyntheticCalibration synthetic_correspondences(const CameraModel& model, int width, int height,
                                               const CorrespondenceConfig& cfg) {
  validate(model);
  if (cfg.n_views <= 0 || cfg.points_per_view <= 0)
    throw std::invalid_argument("synthetic_correspondences: need views and points");
  if (!(cfg.margin >= 0.0) || 2.0 * cfg.margin >= std::min(width, height) - 1)
    throw std::invalid_argument("synthetic_correspondences: margin leaves no pixels");
  if (!(cfg.min_depth > 0.0) || !(cfg.max_depth >= cfg.min_depth))
    throw std::invalid_argument("synthetic_correspondences: bad depth range");

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  SyntheticCalibration out;
  for (int v = 0; v < cfg.n_views; ++v) {
    const double az = 2.0 * M_PI * uni(rng);
    const double el = (uni(rng) - 0.5) * 1.2;  // +-0.6 rad off the equator
    Point3 position(cfg.orbit_radius * std::cos(el) * std::cos(az),
                    cfg.orbit_radius * std::cos(el) * std::sin(az),
                    cfg.orbit_radius * std::sin(el));
    for (int i = 0; i < 3; ++i) position(i) += 0.2 * gauss(rng);
    const Pose pose = look_at_pose(position, Point3::Zero());

    ViewCorrespondences view;
    view.pairs.reserve(cfg.points_per_view);
    int attempts = 0;
    while (static_cast<int>(view.pairs.size()) < cfg.points_per_view) {
      if (++attempts > 1000 * cfg.points_per_view)
        throw std::runtime_error(
            "synthetic_correspondences: could not sample in-domain pixels");
      const Pixel px(cfg.margin + uni(rng) * (width - 1 - 2.0 * cfg.margin),
                     cfg.margin + uni(rng) * (height - 1 - 2.0 * cfg.margin));
      const double depth = cfg.min_depth + uni(rng) * (cfg.max_depth - cfg.min_depth);
      const auto P_cam = try_unproject(model, px, depth);
      if (!P_cam) continue;  // outside the model's admissible image region
      const Point3 P_world = pose.inverse() * *P_cam;
      Pixel observed = px;
      if (cfg.pixel_noise > 0.0) {
        observed.x() += cfg.pixel_noise * gauss(rng);
        observed.y() += cfg.pixel_noise * gauss(rng);
      }
      view.pairs.emplace_back(P_world, observed);
    }
    out.corrs.views.push_back(std::move(view));
    out.poses.push_back(pose);
  }
  return out;
}

RaySurface catadioptric_field(int height, int width, double psi_max_deg) {
  if (width <= 1 || height <= 1)
    throw std::invalid_argument("catadioptric_field: grid too small");
  const double cx = 0.5 * (width - 1), cy = 0.5 * (height - 1);
  const double r_max = std::hypot(cx, cy);
  const double psi_max = psi_max_deg * M_PI / 180.0;
  RaySurface field;
  field.width = width;
  field.height = height;
  field.directions.resize(static_cast<size_t>(width) * height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const double dx = x - cx, dy = y - cy;
      const double rho = std::hypot(dx, dy) / r_max;
      const double psi = rho * psi_max;
      const double phi = std::atan2(dy, dx);
      field.dir(y, x) = Point3(std::sin(psi) * std::cos(phi), std::sin(psi) * std::sin(phi),
                               std::cos(psi));
    }
  return field;
}

Panorama synthetic_plane_panorama(int width, int height, double height_below, double el_min_deg,
                                  double el_max_deg) {
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("synthetic_plane_panorama: empty grid");
  if (!(height_below > 0.0))
    throw std::invalid_argument("synthetic_plane_panorama: plane must lie below the sensor");
  Panorama pano;
  pano.rgb = ImageBuffer(width, height);
  pano.range = DepthMap(width, height);
  pano.el_min_deg = el_min_deg;
  pano.el_max_deg = el_max_deg;
  static const Point3 kSky(0.55, 0.7, 0.9);
  for (int v = 0; v < height; ++v)
    for (int u = 0; u < width; ++u) {
      const Point3 d = pano_direction(pano, u, v);
      if (d.z() < -1e-6) {
        const double range = -height_below / d.z();
        const Point3 P = range * d;
        const Point3 rgb = procedural_texture(0.8 * P.x(), 0.8 * P.y());
        for (int c = 0; c < 3; ++c) pano.rgb.at(v, u, c) = rgb(c);
        pano.range.set(v, u, range);
      } else {
        for (int c = 0; c < 3; ++c) pano.rgb.at(v, u, c) = kSky(c);
      }
    }
  return pano;
}

Rig ring_rig(const CameraModel& model, int n, double ring_radius) {
  validate(model);
  if (n <= 0) throw std::invalid_argument("ring_rig: need at least one camera");
  Rig rig;
  for (int i = 0; i < n; ++i) {
    const double yaw = 2.0 * M_PI * i / n;
    const Point3 outward(std::cos(yaw), std::sin(yaw), 0.0);
    const Point3 position = ring_radius * outward;
    // look_at_pose yields world->camera; the rig stores camera->canonical.
    const Pose w2c = look_at_pose(position, position + outward);
    rig.cameras.push_back({model, w2c.inverse()});
  }
  rig.canonical_index = 0;
  rig.canonicalize();
  return rig;
}

}  // namespace camgeom
