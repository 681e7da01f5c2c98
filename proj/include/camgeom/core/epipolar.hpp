// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <utility>
#include <vector>

#include "camgeom/core/pose.hpp"

namespace camgeom {

// A ray anchored at `origin` with unit `direction`.
struct ViewingRay {
  Point3 origin;
  Point3 direction;  // unit norm
};

// 3x3 fundamental matrix, rank-2 enforced on construction and scaled to
// unit Frobenius norm with a deterministic sign (largest-|entry| positive).
struct FundamentalMatrix {
  Eigen::Matrix3d F;

  // Enforces rank 2 by zeroing the smallest singular value, then normalizes.
  static FundamentalMatrix FromMatrix(const Eigen::Matrix3d& raw);

  // Epipolar residual p1^T F p0 for homogeneous pixels.
  double epipolar_residual(const Pixel& p0, const Pixel& p1) const;
};

// Viewing ray of a pixel for an intrinsic matrix K and a pose.
// origin = -R*t, direction = normalize((K*R)^-1 [u, v, 1]^T).
//
// Note on conventions: under this module's world-to-camera pose
// (x_cam = R x_world + t) the physical camera center is -R^T t; the pair
// implemented here is the self-consistent family used by
// reconstruct_from_pixel below (o + Z (KR)^-1 p traces the same line for
// all Z), and both readings are stated here deliberately.
ViewingRay ray_from_pixel(const Pixel& p, const Eigen::Matrix3d& K, const Pose& pose);

// Point at plane depth Z along the (unnormalized) pixel ray:
// o + Z * (K*R)^-1 [u, v, 1]^T with o = -R*t.
Point3 reconstruct_from_pixel(const Pixel& p, const Eigen::Matrix3d& K, const Pose& pose,
                              double z);

// Fundamental matrix from shared intrinsics K and the relative pose mapping
// view-0 coordinates into view-1 (x1 = R x0 + t):
//   F = K^-T [t]x R K^-1.
// Since [t]x R = R [R^T t]x, this equals K^-T R [t']x K^-1 with the
// translation t' = R^T t expressed in the view-0 frame; the factor order is
// purely a matter of which frame the translation is written in. Validated by
// construction against synthesized correspondences (p1^T F p0 = 0).
FundamentalMatrix fundamental_from_calibration(const Eigen::Matrix3d& K, const Pose& pose);

// Normalized eight-point estimate from pixel correspondences (p0, p1).
// Hartley normalization (centroid to origin, RMS distance sqrt(2)), linear
// nullspace solve, rank-2 truncation. Throws on < 8 points or degenerate
// (coplanar/homography) configurations with a non-unique nullspace.
FundamentalMatrix eight_point(const std::vector<std::pair<Pixel, Pixel>>& corrs);

// First-order geometric residual
//   (p1^T F p0)^2 / ((Fp0)_1^2 + (Fp0)_2^2 + (F^T p1)_1^2 + (F^T p1)_2^2).
// Invariant to rescaling of F. Throws if the denominator vanishes.
double sampson_error(const FundamentalMatrix& F, const Pixel& p0, const Pixel& p1);

}  // namespace camgeom
