// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "camgeom/camera/models.hpp"
#include "camgeom/core/pose.hpp"
#include "camgeom/rig/rig.hpp"

namespace camgeom {

struct AugmentConfig {
  double sigma_v = 0.25;  // virtual-camera translation noise std (meters)
  double sigma_t = 0.1;   // canonical jitter translation std (meters)
  double sigma_r = 0.1;   // canonical jitter rotation std (radians)
  uint64_t seed = 0;
};

// Pose with position = base camera position + N(0, sigma_v^2 I), looking at
// the cloud centroid displaced by an independent N(0, sigma_v^2 I). Draw
// order: position noise xyz, then centroid noise xyz.
Pose virtual_camera(const Pose& base, const PointCloud& cloud, const AugmentConfig& cfg,
                    std::mt19937_64& rng);

struct VirtualProjection {
  DepthMap depth;     // plane depth; invalid where no point landed
  ImageBuffer image;  // zeros where no point landed
};

// Z-buffer splat of the cloud into a posed pinhole camera: each point
// projects to its nearest pixel; the smallest depth wins.
VirtualProjection project_to_virtual(const PointCloud& cloud, const PinholeParams& K,
                                     const Pose& cam, int W, int H);

// One noise pose T0 (Euler-XYZ rotation from N(0, sigma_r^2), translation
// from N(0, sigma_t^2); draws: translation xyz then rotation xyz) applied on
// the left of every extrinsic: T_i' = T0 * T_i. The common left factor
// cancels in T_j'^{-1} * T_i', so those relative poses are preserved.
std::vector<Pose> canonical_jitter(const std::vector<Pose>& extrinsics, const AugmentConfig& cfg,
                                   std::mt19937_64& rng);

// Re-expresses all extrinsics relative to a uniformly drawn camera o:
// T_i' = T_i * T_o^{-1}; camera o's own pose becomes the identity while the
// common right factor cancels in T_i' * T_j'^{-1}, preserving those
// relative poses exactly.
std::vector<Pose> canonical_randomize(const std::vector<Pose>& extrinsics, std::mt19937_64& rng);

}  // namespace camgeom
