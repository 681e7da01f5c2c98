// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <Eigen/Dense>

namespace camgeom {

using Pixel = Eigen::Vector2d;   // image coordinates (u, v) in pixels
using Point3 = Eigen::Vector3d;  // scene coordinates in meters

// Rigid SE(3) transform. Convention: a Pose maps points from the reference
// (world/canonical) frame into the camera frame, x_cam = R * x_ref + t.
// Where a different direction is intended (e.g. rig extrinsics stored
// camera-to-canonical), the owning type documents it explicitly.
struct Pose {
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();

  static Pose Identity() { return {}; }

  // Build from a 4x4 homogeneous matrix (last row must be 0 0 0 1).
  static Pose FromMatrix(const Eigen::Matrix4d& m);

  Point3 operator*(const Point3& p) const { return R * p + t; }

  // Composition: (a * b) applies b first, then a.
  Pose operator*(const Pose& other) const {
    return {R * other.R, R * other.t + t};
  }

  Pose inverse() const { return {R.transpose(), -(R.transpose() * t)}; }

  Eigen::Matrix4d matrix() const;

  // Orthonormality and det(R) = +1, both to `tol`.
  bool is_rigid(double tol = 1e-9) const;
};

// Composition helper mirroring Pose::operator*: applies b, then a.
inline Pose compose(const Pose& a, const Pose& b) { return a * b; }

inline Pose invert(const Pose& p) { return p.inverse(); }

// Skew-symmetric cross-product matrix [v]x such that [v]x * w = v x w.
Eigen::Matrix3d skew(const Eigen::Vector3d& v);

// Rotation about x, then y, then z applied intrinsically:
// R = Rx(rx) * Ry(ry) * Rz(rz).
Eigen::Matrix3d rotation_from_euler_xyz(const Eigen::Vector3d& rx_ry_rz);

// Inverse of rotation_from_euler_xyz; second angle in [-pi/2, pi/2].
Eigen::Vector3d euler_xyz_from_rotation(const Eigen::Matrix3d& R);

// Axis-angle (rotation-vector) exponential map.
Eigen::Matrix3d rotation_from_axis_angle(const Eigen::Vector3d& w);

// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

// World-to-camera pose of a camera at `position` looking at `target`
// (camera +z toward the target, +x right, +y down for an upright scene).
// `up` defaults to (0,0,1); when the view direction is within 1e-6 of
// parallel to `up`, (0,1,0) is used instead.
Pose look_at_pose(const Point3& position, const Point3& target,
                  const Point3& up = Point3(0, 0, 1));

}  // namespace camgeom
