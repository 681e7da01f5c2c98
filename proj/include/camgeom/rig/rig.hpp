// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <vector>

#include "camgeom/camera/models.hpp"
#include "camgeom/core/pose.hpp"
#include "camgeom/photo/image.hpp"

namespace camgeom {

// One camera of a multi-camera rig. `extrinsic` X_i maps camera-i
// coordinates into the canonical camera's frame: P_canonical = X_i * P_i.
struct RigCamera {
  CameraModel model;
  Pose extrinsic = Pose::Identity();
};

struct Rig {
  std::vector<RigCamera> cameras;
  int canonical_index = 0;

  int size() const { return static_cast<int>(cameras.size()); }

  // X_{i->j} mapping camera-i coordinates to camera-j coordinates
  // (through the canonical frame).
  Pose relative_extrinsic(int i, int j) const;

  // Re-expresses all extrinsics relative to cameras[canonical_index], whose
  // extrinsic becomes the identity. Relative poses are unchanged.
  void canonicalize();

  void require_index(int i, const char* where) const;
};

// Per-camera image/depth triplets at timesteps {t-1, t, t+1} plus the
// predicted ego-motion of that camera toward each context timestep
// (camera-frame coordinates at t mapped to coordinates at t-1 / t+1).
struct CameraFrames {
  std::array<ImageBuffer, 3> images;
  std::array<DepthMap, 3> depths;
  Pose ego_prev = Pose::Identity();
  Pose ego_next = Pose::Identity();
};

struct FrameSet {
  std::vector<CameraFrames> cameras;
};

// Per-camera-pair non-overlap masks (indexed [from][to]) and per-camera
// self-occlusion masks.
struct MaskSet {
  std::vector<std::vector<MaskImage>> nonoverlap;
  std::vector<MaskImage> self_occlusion;
};

struct PointCloud {
  std::vector<Point3> points;
  std::vector<Point3> colors;  // rgb in [0, 1], parallel to points
};

}  // namespace camgeom
