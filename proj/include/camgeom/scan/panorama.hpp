// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <vector>

#include "camgeom/core/pose.hpp"
#include "camgeom/photo/image.hpp"

namespace camgeom {

// Equirectangular survey scan: RGB plus per-pixel Euclidean range in meters
// (0 / invalid = no return). Pixel centers map to angles as
//   azimuth(u)  = (u + 0.5) / W * 360 - 180            (degrees)
//   elevation(v) = el_max - (v + 0.5) / H * (el_max - el_min)
// with the default coverage spanning the full sphere. Directions are z-up:
// (cos el cos az, cos el sin az, sin el).
struct Panorama {
  ImageBuffer rgb;
  DepthMap range;
  double el_min_deg = -90.0;
  double el_max_deg = 90.0;

  int width() const { return rgb.width; }
  int height() const { return rgb.height; }
};

// Angles (radians) of a pano pixel center.
double pano_azimuth(const Panorama& pano, int u);
double pano_elevation(const Panorama& pano, int v);

// Unit direction of a pano pixel center.
Point3 pano_direction(const Panorama& pano, int u, int v);

// Unit direction for arbitrary azimuth/elevation (radians), z-up.
Point3 direction_from_angles(double azimuth, double elevation);

// Scan points on the pano grid: direction * range where a return exists.
struct PointGrid {
  int width = 0, height = 0;
  std::vector<Point3> points;
  std::vector<uint8_t> valid;

  size_t idx(int y, int x) const { return static_cast<size_t>(y) * width + x; }
  bool is_valid(int y, int x) const { return valid[idx(y, x)] != 0; }
};

PointGrid pano_to_points(const Panorama& pano);

}  // namespace camgeom
