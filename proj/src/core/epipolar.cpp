// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/core/epipolar.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace camgeom {

namespace {

Eigen::Vector3d homogeneous(const Pixel& p) { return {p.x(), p.y(), 1.0}; }

// Deterministic scale/sign: unit Frobenius norm, largest-|entry| positive.
Eigen::Matrix3d normalize_f(Eigen::Matrix3d F) {
  const double n = F.norm();
  if (n > 0) F /= n;
  int r = 0, c = 0;
  F.cwiseAbs().maxCoeff(&r, &c);
  if (F(r, c) < 0) F = -F;
  return F;
}

}  // namespace

FundamentalMatrix FundamentalMatrix::FromMatrix(const Eigen::Matrix3d& raw) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(raw, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector3d s = svd.singularValues();
  s(2) = 0.0;
  Eigen::Matrix3d f = svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
  return {normalize_f(f)};
}

double FundamentalMatrix::epipolar_residual(const Pixel& p0, const Pixel& p1) const {
  return homogeneous(p1).dot(F * homogeneous(p0));
}

ViewingRay ray_from_pixel(const Pixel& p, const Eigen::Matrix3d& K, const Pose& pose) {
  Eigen::FullPivLU<Eigen::Matrix3d> lu(K);
  if (!lu.isInvertible()) throw std::invalid_argument("ray_from_pixel: singular intrinsics");
  ViewingRay ray;
  ray.origin = -(pose.R * pose.t);
  const Eigen::Vector3d d = (K * pose.R).inverse() * homogeneous(p);
  ray.direction = d.normalized();
  return ray;
}

Point3 reconstruct_from_pixel(const Pixel& p, const Eigen::Matrix3d& K, const Pose& pose,
                              double z) {
  Eigen::FullPivLU<Eigen::Matrix3d> lu(K);
  if (!lu.isInvertible())
    throw std::invalid_argument("reconstruct_from_pixel: singular intrinsics");
  return -(pose.R * pose.t) + z * ((K * pose.R).inverse() * homogeneous(p));
}

FundamentalMatrix fundamental_from_calibration(const Eigen::Matrix3d& K, const Pose& pose) {
  Eigen::FullPivLU<Eigen::Matrix3d> lu(K);
  if (!lu.isInvertible())
    throw std::invalid_argument("fundamental_from_calibration: singular intrinsics");
  if (pose.t.norm() == 0.0)
    throw std::invalid_argument(
        "fundamental_from_calibration: zero translation gives a degenerate F");
  const Eigen::Matrix3d Kinv = K.inverse();
  return FundamentalMatrix::FromMatrix(Kinv.transpose() * skew(pose.t) * pose.R * Kinv);
}

FundamentalMatrix eight_point(const std::vector<std::pair<Pixel, Pixel>>& corrs) {
  const int n = static_cast<int>(corrs.size());
  if (n < 8) throw std::invalid_argument("eight_point: need at least 8 correspondences");

  // Hartley normalization: shift centroid to origin, scale RMS radius to sqrt(2).
  auto normalizer = [&](bool second) {
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& [a, b] : corrs) c += second ? b : a;
    c /= n;
    double rms = 0;
    for (const auto& [a, b] : corrs) rms += ((second ? b : a) - c).squaredNorm();
    rms = std::sqrt(rms / n);
    const double s = rms > 0 ? std::sqrt(2.0) / rms : 1.0;
    Eigen::Matrix3d T = Eigen::Matrix3d::Identity();
    T(0, 0) = T(1, 1) = s;
    T(0, 2) = -s * c.x();
    T(1, 2) = -s * c.y();
    return T;
  };
  const Eigen::Matrix3d T0 = normalizer(false), T1 = normalizer(true);

  Eigen::MatrixXd A(n, 9);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d q0 = T0 * homogeneous(corrs[i].first);
    const Eigen::Vector3d q1 = T1 * homogeneous(corrs[i].second);
    A.row(i) << q1.x() * q0.x(), q1.x() * q0.y(), q1.x() * q0.z(),
                q1.y() * q0.x(), q1.y() * q0.y(), q1.y() * q0.z(),
                q1.z() * q0.x(), q1.z() * q0.y(), q1.z() * q0.z();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  // A unique (up to scale) solution needs rank 8: the second-smallest singular
  // value must be well separated from zero. Coplanar scenes collapse it.
  if (sv(7) < 1e-10 * sv(0))
    throw std::invalid_argument("eight_point: degenerate configuration (nullspace not unique)");
  const Eigen::VectorXd f = svd.matrixV().col(8);
  Eigen::Matrix3d Fn;
  Fn << f(0), f(1), f(2), f(3), f(4), f(5), f(6), f(7), f(8);
  return FundamentalMatrix::FromMatrix(T1.transpose() * Fn * T0);
}

double sampson_error(const FundamentalMatrix& F, const Pixel& p0, const Pixel& p1) {
  const Eigen::Vector3d Fp0 = F.F * homogeneous(p0);
  const Eigen::Vector3d Ftp1 = F.F.transpose() * homogeneous(p1);
  const double num = homogeneous(p1).dot(Fp0);
  const double den =
      Fp0.x() * Fp0.x() + Fp0.y() * Fp0.y() + Ftp1.x() * Ftp1.x() + Ftp1.y() * Ftp1.y();
  if (den == 0.0)
    throw std::domain_error("sampson_error: zero denominator (degenerate configuration)");
  return num * num / den;
}

}  // namespace camgeom
