// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <vector>

#include "camgeom/camera/models.hpp"
#include "camgeom/core/pose.hpp"
#include "camgeom/embed/fourier.hpp"

namespace camgeom {

// Per-pixel ray bundle of a posed pinhole camera: one shared origin and a
// row-major H x W grid of (not necessarily unit) directions.
struct RayGrid {
  int width = 0, height = 0;
  Point3 origin = Point3::Zero();
  std::vector<Point3> directions;

  size_t idx(int y, int x) const { return static_cast<size_t>(y) * width + x; }
};

// o = -R t, matching ray_from_pixel's origin convention;
// r = (K R)^{-1} [u, v, 1]^T, plus t when `include_translation` is set.
// The +t variant follows the encoding convention this representation was
// defined with; the flag exists because the same quantity without +t is the
// plain viewing-ray direction.
RayGrid camera_rays(const PinholeParams& K, const Pose& T, int H, int W,
                    bool include_translation = true);

// H x W x C grid of per-pixel embeddings: Fourier-encoded origin
// concatenated with the Fourier-encoded ray direction;
// C = 3(2 K_o + 1) + 3(2 K_r + 1).
struct CameraEmbedding {
  int width = 0, height = 0, channels = 0;
  std::vector<double> data;  // row-major, channel-minor

  size_t idx(int y, int x, int c) const {
    return (static_cast<size_t>(y) * width + x) * channels + c;
  }
};

CameraEmbedding camera_embedding(const RayGrid& rays, const FourierConfig& cfg);

}  // namespace camgeom
