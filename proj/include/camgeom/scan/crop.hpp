// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include "camgeom/camera/models.hpp"
#include "camgeom/scan/panorama.hpp"

namespace camgeom {

// Rectified pinhole crop pointing at (azimuth, elevation) with the given
// field of view; focal lengths follow from FOV and resolution, principal
// point at the pixel-grid center.
struct CropSpec {
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;
  double fov_h_deg = 60.0;
  double fov_v_deg = 45.0;
  int width = 512;
  int height = 384;
};

struct Crop {
  ImageBuffer image;
  DepthMap depth;  // Euclidean range along each crop ray; 0 / invalid = no returns
  PinholeParams intrinsics;
};

// Pinhole intrinsics implied by a crop spec.
PinholeParams crop_intrinsics(const CropSpec& spec);

// World direction of a crop pixel center (continuous pixel coords allowed).
Point3 crop_ray(const CropSpec& spec, double x, double y);

// Resamples the panorama along each crop ray. RGB is the mean of the five
// angularly nearest pano pixels; range is the central-80%-by-value mean of
// returns within 0.5 degrees of the ray (no returns -> 0, invalid). Throws
// when the crop's rays leave the panorama's elevation coverage.
Crop extract_crop(const Panorama& pano, const CropSpec& spec);

// Single-threaded reference; bitwise-identical to extract_crop().
Crop extract_crop_serial(const Panorama& pano, const CropSpec& spec);

// Per-pixel conversion between range along the ray and planar depth
// Z = range * cos(off-axis angle) for a pinhole camera.
DepthMap crop_range_to_plane(const DepthMap& range, const PinholeParams& K);
DepthMap crop_plane_to_range(const DepthMap& plane, const PinholeParams& K);

}  // namespace camgeom
