// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <vector>

#include "camgeom/calib/calibrate.hpp"
#include "camgeom/camera/models.hpp"
#include "camgeom/core/pose.hpp"
#include "camgeom/photo/image.hpp"
#include "camgeom/rays/ray_surface.hpp"
#include "camgeom/rig/rig.hpp"
#include "camgeom/scan/panorama.hpp"

namespace camgeom {

// Deterministic synthetic inputs shared by the test suite and the CLI:
// procedurally textured scenes rendered through any camera model, calibration
// correspondence sets, wide-angle ray fields, and scanner panoramas.

// Smooth (C-infinity) RGB texture over a 2D coordinate; every channel is a
// short sum of sinusoids with values strictly inside (0, 1) and non-vanishing
// gradients almost everywhere.
Point3 procedural_texture(double a, double b);

struct RenderedView {
  ImageBuffer image;
  DepthMap depth;  // in the camera model's own depth convention
};

// Infinite plane z = plane_z (world frame) textured by
// procedural_texture(scale * x, scale * y). Rays that miss the plane or leave
// the model's projection domain produce black pixels with invalid depth.
struct PlaneSceneConfig {
  double plane_z = 5.0;
  double texture_scale = 1.0;
};
RenderedView render_plane(const CameraModel& model, const Pose& world_to_camera, int width,
                          int height, const PlaneSceneConfig& scene = {});

// Interior of the axis-aligned box [center - half, center + half]^3 seen from
// a viewpoint inside it; each face carries the procedural texture blended
// with a per-face tint so faces are distinguishable.
struct BoxSceneConfig {
  Point3 center = Point3::Zero();
  double half = 6.0;
  double texture_scale = 1.0;
};
RenderedView render_box(const CameraModel& model, const Pose& world_to_camera, int width,
                        int height, const BoxSceneConfig& scene = {});

// Calibration data: cameras orbit the origin (look-at poses on a jittered
// sphere); per view, pixels are drawn uniformly inside a border margin and
// depths uniformly in [min_depth, max_depth]; the world point is the true
// model's unprojection, and the observation optionally carries isotropic
// Gaussian pixel noise. Observations reproject exactly when noise is 0.
struct CorrespondenceConfig {
  int n_views = 20;
  int points_per_view = 80;
  double min_depth = 1.5;
  double max_depth = 6.0;
  double margin = 6.0;        // pixels excluded at each border
  double pixel_noise = 0.0;   // std-dev in pixels
  double orbit_radius = 4.0;  // meters from the origin
  uint64_t seed = 1;
};
struct SyntheticCalibration {
  CorrespondenceSet corrs;
  std::vector<Pose> poses;  // true world-to-camera poses, one per view
};
SyntheticCalibration synthetic_correspondences(const CameraModel& model, int width, int height,
                                               const CorrespondenceConfig& cfg);

// Mirror-lens-like central ray field: the polar angle grows linearly with the
// normalized pixel radius up to psi_max_deg (beyond 90 deg the field leaves
// the forward hemisphere, which no pinhole can represent).
RaySurface catadioptric_field(int height, int width, double psi_max_deg = 120.0);

// Scanner panorama of the textured horizontal plane z = -height_below (sensor
// at the origin, z-up). Downward-looking pixels return range and color;
// upward ones carry no return and a flat sky color.
Panorama synthetic_plane_panorama(int width, int height, double height_below,
                                  double el_min_deg = -90.0, double el_max_deg = 90.0);

// n cameras sharing `model`, evenly yaw-spaced on a horizontal ring of the
// given radius, each facing outward; extrinsics are canonicalized so camera 0
// is the rig anchor.
Rig ring_rig(const CameraModel& model, int n, double ring_radius);

}  // namespace camgeom
