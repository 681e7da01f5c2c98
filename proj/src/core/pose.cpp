// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/core/pose.hpp"

#include <cmath>
#include <stdexcept>

namespace camgeom {

Pose Pose::FromMatrix(const Eigen::Matrix4d& m) {
  if ((m.row(3) - Eigen::RowVector4d(0, 0, 0, 1)).norm() > 1e-12)
    throw std::invalid_argument("Pose::FromMatrix: last row must be 0 0 0 1");
  Pose p;
  p.R = m.topLeftCorner<3, 3>();
  p.t = m.topRightCorner<3, 1>();
  return p;
}

Eigen::Matrix4d Pose::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = R;
  m.topRightCorner<3, 1>() = t;
  return m;
}

bool Pose::is_rigid(double tol) const {
  return (R.transpose() * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(R.determinant() - 1.0) <= tol && t.allFinite();
}

Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0, -v.z(), v.y(),
       v.z(), 0, -v.x(),
       -v.y(), v.x(), 0;
  return m;
}

Eigen::Matrix3d rotation_from_euler_xyz(const Eigen::Vector3d& e) {
  return (Eigen::AngleAxisd(e.x(), Eigen::Vector3d::UnitX()) *
          Eigen::AngleAxisd(e.y(), Eigen::Vector3d::UnitY()) *
          Eigen::AngleAxisd(e.z(), Eigen::Vector3d::UnitZ()))
      .toRotationMatrix();
}

Eigen::Vector3d euler_xyz_from_rotation(const Eigen::Matrix3d& R) {
  // R = Rx * Ry * Rz gives R(0,2) = sin(ry), R(1,2) = -cos(ry) sin(rx), ...
  Eigen::Vector3d e;
  e.y() = std::asin(std::clamp(R(0, 2), -1.0, 1.0));
  if (std::abs(R(0, 2)) < 1.0 - 1e-12) {
    e.x() = std::atan2(-R(1, 2), R(2, 2));
    e.z() = std::atan2(-R(0, 1), R(0, 0));
  } else {
    // Gimbal lock: ry = +-pi/2; only rx +- rz is observable. Fix rz = 0.
    e.x() = std::atan2(R(2, 1), R(1, 1));
    e.z() = 0.0;
  }
  return e;
}

Eigen::Matrix3d rotation_from_axis_angle(const Eigen::Vector3d& w) {
  const double angle = w.norm();
  if (angle < 1e-12) {
    // Second-order expansion keeps the map smooth through zero.
    return Eigen::Matrix3d::Identity() + skew(w);
  }
  return Eigen::AngleAxisd(angle, w / angle).toRotationMatrix();
}

double wrap_angle(double a) {
  const double two_pi = 2.0 * M_PI;
  a = std::fmod(a, two_pi);
  if (a <= -M_PI) a += two_pi;
  if (a > M_PI) a -= two_pi;
  return a;
}

Pose look_at_pose(const Point3& position, const Point3& target, const Point3& up) {
  Eigen::Vector3d forward = target - position;
  const double n = forward.norm();
  if (n < 1e-12) throw std::invalid_argument("look_at_pose: target coincides with position");
  forward /= n;
  Eigen::Vector3d u = up.normalized();
  if (forward.cross(u).norm() < 1e-6) u = Eigen::Vector3d(0, 1, 0);
  const Eigen::Vector3d right = forward.cross(u).normalized();
  const Eigen::Vector3d down = forward.cross(right);  // unit by construction
  Pose pose;
  pose.R.row(0) = right;
  pose.R.row(1) = down;
  pose.R.row(2) = forward;
  pose.t = -(pose.R * position);
  return pose;
}

}  // namespace camgeom
