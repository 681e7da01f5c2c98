// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <Eigen/Dense>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <stdexcept>
#include <string>

#include "camgeom/calib/calibrate.hpp"

namespace camgeom {

namespace {

// Similarity transform sending the 2D points' centroid to the origin with
// RMS distance sqrt(2).
Eigen::Matrix3d normalizer_2d(const std::vector<std::pair<Point3, Pixel>>& pairs) {
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  for (const auto& [P, p] : pairs) mean += p;
  mean /= static_cast<double>(pairs.size());
  double rms = 0.0;
  for (const auto& [P, p] : pairs) rms += (p - mean).squaredNorm();
  rms = std::sqrt(rms / static_cast<double>(pairs.size()));
  const double s = (rms > 0.0) ? std::sqrt(2.0) / rms : 1.0;
  Eigen::Matrix3d T = Eigen::Matrix3d::Identity();
  T(0, 0) = T(1, 1) = s;
  T(0, 2) = -s * mean.x();
  T(1, 2) = -s * mean.y();
  return T;
}

// Same for the 3D points, with RMS distance sqrt(3).
Eigen::Matrix4d normalizer_3d(const std::vector<std::pair<Point3, Pixel>>& pairs) {
  Point3 mean = Point3::Zero();
  for (const auto& [P, p] : pairs) mean += P;
  mean /= static_cast<double>(pairs.size());
  double rms = 0.0;
  for (const auto& [P, p] : pairs) rms += (P - mean).squaredNorm();
  rms = std::sqrt(rms / static_cast<double>(pairs.size()));
  const double s = (rms > 0.0) ? std::sqrt(3.0) / rms : 1.0;
  Eigen::Matrix4d U = Eigen::Matrix4d::Identity();
  U(0, 0) = U(1, 1) = U(2, 2) = s;
  U.block<3, 1>(0, 3) = -s * mean;
  return U;
}

// Smallest-to-largest singular-value ratio of the centered 3D scatter;
// near-zero means the points lie in a plane (or worse).
double scatter_flatness(const std::vector<std::pair<Point3, Pixel>>& pairs) {
  Point3 mean = Point3::Zero();
  for (const auto& [P, p] : pairs) mean += P;
  mean /= static_cast<double>(pairs.size());
  Eigen::Matrix3d S = Eigen::Matrix3d::Zero();
  for (const auto& [P, p] : pairs) {
    const Point3 d = P - mean;
    S += d * d.transpose();
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(S);
  const double s0 = svd.singularValues()(0);
  if (s0 <= 0.0) return 0.0;
  return svd.singularValues()(2) / s0;
}

}  // namespace

Eigen::Matrix<double, 3, 4> dlt_projection_matrix(const ViewCorrespondences& view) {
  const auto& pairs = view.pairs;
  const int n = static_cast<int>(pairs.size());
  if (n < 6) {
    throw std::invalid_argument("dlt_projection_matrix: need at least 6 correspondences, got " +
                                std::to_string(n));
  }
  if (scatter_flatness(pairs) < 1e-10) {
    throw std::invalid_argument(
        "dlt_projection_matrix: 3D points are coplanar; the design matrix is rank-deficient");
  }

  const Eigen::Matrix3d T = normalizer_2d(pairs);
  const Eigen::Matrix4d U = normalizer_3d(pairs);

  Eigen::MatrixXd A(2 * n, 12);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector4d Pn = U * pairs[i].first.homogeneous();
    const Eigen::Vector3d pn = T * pairs[i].second.homogeneous();
    A.row(2 * i) << Pn.transpose(), Eigen::RowVector4d::Zero(), -pn.x() * Pn.transpose();
    A.row(2 * i + 1) << Eigen::RowVector4d::Zero(), Pn.transpose(), -pn.y() * Pn.transpose();
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  // lambda p = M P has an 11-dimensional constraint space; anything flatter
  // means the correspondences do not determine M.
  if (sv(10) < 1e-10 * sv(0)) {
    throw std::invalid_argument("dlt_projection_matrix: rank-deficient design matrix");
  }
  const Eigen::VectorXd m = svd.matrixV().col(11);
  Eigen::Matrix<double, 3, 4> Mn;
  Mn.row(0) = m.segment<4>(0).transpose();
  Mn.row(1) = m.segment<4>(4).transpose();
  Mn.row(2) = m.segment<4>(8).transpose();

  Eigen::Matrix<double, 3, 4> M = T.inverse() * Mn * U;
  M /= M.norm();
  // Deterministic sign: largest-magnitude entry positive.
  double best = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c)
      if (std::abs(M(r, c)) > std::abs(best)) best = M(r, c);
  if (best < 0.0) M = -M;
  return M;
}

std::pair<Eigen::Matrix3d, Pose> decompose_projection(const Eigen::Matrix<double, 3, 4>& M) {
  const Eigen::Matrix3d A = M.leftCols<3>();
  Eigen::FullPivLU<Eigen::Matrix3d> lu(A);
  if (!lu.isInvertible()) {
    throw std::invalid_argument("decompose_projection: leading 3x3 block is singular");
  }

  // RQ via QR of the row-reversed transpose: with P the row-reversal
  // permutation, A = (P R1^T P)(P Q1^T) where Abar^T = Q1 R1.
  Eigen::Matrix3d P = Eigen::Matrix3d::Zero();
  P(0, 2) = P(1, 1) = P(2, 0) = 1.0;
  const Eigen::Matrix3d At = (P * A).transpose();
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(At);
  const Eigen::Matrix3d Q1 = qr.householderQ();
  const Eigen::Matrix3d R1 = qr.matrixQR().triangularView<Eigen::Upper>();
  Eigen::Matrix3d K = P * R1.transpose() * P;
  Eigen::Matrix3d R = P * Q1.transpose();

  // Make K's diagonal positive, then absorb any remaining reflection into
  // the projective scale so det(R) = +1.
  Eigen::Vector3d d;
  for (int i = 0; i < 3; ++i) d(i) = (K(i, i) < 0.0) ? -1.0 : 1.0;
  K = K * d.asDiagonal();
  R = d.asDiagonal() * R;
  const double s = (R.determinant() < 0.0) ? -1.0 : 1.0;
  R *= s;
  const double scale = s * K(2, 2);  // A = scale * (K / K(2,2)) * R
  K /= K(2, 2);

  Pose pose;
  pose.R = R;
  pose.t = K.inverse() * M.col(3) / scale;
  return {K, pose};
}

}  // namespace camgeom
