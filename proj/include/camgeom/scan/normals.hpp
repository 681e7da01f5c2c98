// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>

#include "camgeom/scan/panorama.hpp"

namespace camgeom {

struct NormalGrid {
  int width = 0, height = 0;
  std::vector<Point3> normals;  // unit vectors; exact zero = no estimate

  size_t idx(int y, int x) const { return static_cast<size_t>(y) * width + x; }
};

struct NormalsConfig {
  int iterations = 100;       // RANSAC rounds per pixel
  int window = 11;            // odd neighborhood side length
  double accept_fraction = 0.4;
  uint64_t seed = 0;
};

// Per-pixel RANSAC plane fit over the 11x11 neighborhood: planes are
// anchored at the neighborhood's componentwise median point, the inlier
// threshold scales linearly with range from 0.2 mm at 1 m to 6 cm at 300 m
// (clamped), and a fit is kept only when at least 40% of the neighbors are
// inliers; the accepted plane is least-squares refined over its inliers and
// oriented toward the origin. Pixels without an accepted fit get the zero
// vector. Each pixel uses its own hash-seeded random stream, so results are
// independent of scheduling.
NormalGrid estimate_normals(const PointGrid& grid, const NormalsConfig& cfg = {});

// Single-threaded reference; bitwise-identical to estimate_normals().
NormalGrid estimate_normals_serial(const PointGrid& grid, const NormalsConfig& cfg = {});

}  // namespace camgeom
