// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/camera/models.hpp"

#include <cmath>
#include <stdexcept>

namespace camgeom {

namespace {

constexpr int kUndistortMaxIters = 20;
constexpr double kUndistortTol = 1e-10;

// ---- pinhole ---------------------------------------------------------------

std::optional<Pixel> project_pinhole(const PinholeParams& c, const Point3& P) {
  if (P.z() <= kProjectionEps) return std::nullopt;
  return Pixel(c.fx * P.x() / P.z() + c.cx, c.fy * P.y() / P.z() + c.cy);
}

Point3 unproject_pinhole(const PinholeParams& c, const Pixel& p, double z) {
  return {z * (p.x() - c.cx) / c.fx, z * (p.y() - c.cy) / c.fy, z};
}

// ---- Brown-Conrady ---------------------------------------------------------

// Distortion in normalized coordinates; r^2 is taken from the undistorted
// point (standard Brown-Conrady).
Eigen::Vector2d distort_normalized(const BrownConradyParams& c, const Eigen::Vector2d& n) {
  const double x = n.x(), y = n.y();
  const double r2 = x * x + y * y;
  const double radial = 1.0 + r2 * (c.k1 + r2 * (c.k2 + r2 * c.k3));
  return {x * radial + 2.0 * c.p1 * x * y + c.p2 * (r2 + 2.0 * x * x),
          y * radial + c.p1 * (r2 + 2.0 * y * y) + 2.0 * c.p2 * x * y};
}

Eigen::Matrix2d distort_jacobian(const BrownConradyParams& c, const Eigen::Vector2d& n) {
  const double x = n.x(), y = n.y();
  const double r2 = x * x + y * y;
  const double radial = 1.0 + r2 * (c.k1 + r2 * (c.k2 + r2 * c.k3));
  const double dradial_dr2 = c.k1 + 2.0 * c.k2 * r2 + 3.0 * c.k3 * r2 * r2;
  Eigen::Matrix2d J;
  J(0, 0) = radial + 2.0 * x * x * dradial_dr2 + 2.0 * c.p1 * y + 6.0 * c.p2 * x;
  J(0, 1) = 2.0 * x * y * dradial_dr2 + 2.0 * c.p1 * x + 2.0 * c.p2 * y;
  J(1, 0) = 2.0 * x * y * dradial_dr2 + 2.0 * c.p1 * y + 2.0 * c.p2 * x;
  J(1, 1) = radial + 2.0 * y * y * dradial_dr2 + 6.0 * c.p1 * y + 2.0 * c.p2 * x;
  return J;
}

// Newton inversion of the distortion map (no closed form exists).
std::optional<Eigen::Vector2d> undistort_normalized(const BrownConradyParams& c,
                                                    const Eigen::Vector2d& distorted) {
  Eigen::Vector2d n = distorted;  // distorted point is a good initial guess
  for (int it = 0; it < kUndistortMaxIters; ++it) {
    const Eigen::Vector2d residual = distort_normalized(c, n) - distorted;
    if (residual.cwiseAbs().maxCoeff() < kUndistortTol) return n;
    const Eigen::Matrix2d J = distort_jacobian(c, n);
    const double det = J.determinant();
    if (std::abs(det) < 1e-15) return std::nullopt;
    n -= J.inverse() * residual;
  }
  if ((distort_normalized(c, n) - distorted).cwiseAbs().maxCoeff() < kUndistortTol) return n;
  return std::nullopt;
}

std::optional<Pixel> project_brown(const BrownConradyParams& c, const Point3& P) {
  if (P.z() <= kProjectionEps) return std::nullopt;
  const Eigen::Vector2d d = distort_normalized(c, {P.x() / P.z(), P.y() / P.z()});
  return Pixel(c.pinhole.fx * d.x() + c.pinhole.cx, c.pinhole.fy * d.y() + c.pinhole.cy);
}

std::optional<Point3> unproject_brown(const BrownConradyParams& c, const Pixel& p, double z) {
  const Eigen::Vector2d distorted((p.x() - c.pinhole.cx) / c.pinhole.fx,
                                  (p.y() - c.pinhole.cy) / c.pinhole.fy);
  const auto n = undistort_normalized(c, distorted);
  if (!n) return std::nullopt;
  return Point3(z * n->x(), z * n->y(), z);
}

// ---- UCM -------------------------------------------------------------------

std::optional<Pixel> project_ucm(const UcmParams& c, const Point3& P) {
  const double d = P.norm();
  const double denom = c.alpha * d + (1.0 - c.alpha) * P.z();
  if (denom <= kProjectionEps) return std::nullopt;
  return Pixel(c.fx * P.x() / denom + c.cx, c.fy * P.y() / denom + c.cy);
}

// Unit direction through a UCM pixel, or nullopt outside the admissible
// radius (alpha > 0.5 limits r^2 to (1-alpha)^2 / (2 alpha - 1)).
std::optional<Point3> ucm_direction(const UcmParams& c, const Pixel& p) {
  const double mx = (p.x() - c.cx) / c.fx * (1.0 - c.alpha);
  const double my = (p.y() - c.cy) / c.fy * (1.0 - c.alpha);
  const double r2 = mx * mx + my * my;
  const double xi = c.alpha / (1.0 - c.alpha);
  const double sq = 1.0 + (1.0 - xi * xi) * r2;
  if (sq < 0.0) return std::nullopt;
  const double factor = (xi + std::sqrt(sq)) / (1.0 + r2);
  // (factor*mx, factor*my, factor) - (0,0,xi) lies on the unit sphere.
  return Point3(factor * mx, factor * my, factor - xi);
}

std::optional<Point3> unproject_ucm(const UcmParams& c, const Pixel& p, double range) {
  const auto dir = ucm_direction(c, p);
  if (!dir) return std::nullopt;
  return range * *dir;
}

// ---- EUCM ------------------------------------------------------------------

std::optional<Pixel> project_eucm(const EucmParams& c, const Point3& P) {
  const double d =
      std::sqrt(c.beta * (P.x() * P.x() + P.y() * P.y()) + P.z() * P.z());
  const double denom = c.alpha * d + (1.0 - c.alpha) * P.z();
  if (denom <= kProjectionEps) return std::nullopt;
  return Pixel(c.fx * P.x() / denom + c.cx, c.fy * P.y() / denom + c.cy);
}

std::optional<Point3> eucm_direction(const EucmParams& c, const Pixel& p) {
  const double mx = (p.x() - c.cx) / c.fx;
  const double my = (p.y() - c.cy) / c.fy;
  const double r2 = mx * mx + my * my;
  const double inner = 1.0 - (2.0 * c.alpha - 1.0) * c.beta * r2;
  if (inner < 0.0) return std::nullopt;  // r^2 > 1/(beta (2 alpha - 1))
  const double mz =
      (1.0 - c.beta * c.alpha * c.alpha * r2) / (c.alpha * std::sqrt(inner) + 1.0 - c.alpha);
  return Point3(mx, my, mz).normalized();
}

std::optional<Point3> unproject_eucm(const EucmParams& c, const Pixel& p, double range) {
  const auto dir = eucm_direction(c, p);
  if (!dir) return std::nullopt;
  return range * *dir;
}

// ---- Double Sphere ---------------------------------------------------------

std::optional<Pixel> project_ds(const DsParams& c, const Point3& P) {
  const double d1 = P.norm();
  const double zs = c.xi * d1 + P.z();
  const double d2 = std::sqrt(P.x() * P.x() + P.y() * P.y() + zs * zs);
  const double denom = c.alpha * d2 + (1.0 - c.alpha) * zs;
  if (denom <= kProjectionEps) return std::nullopt;
  return Pixel(c.fx * P.x() / denom + c.cx, c.fy * P.y() / denom + c.cy);
}

std::optional<Point3> ds_direction(const DsParams& c, const Pixel& p) {
  const double mx = (p.x() - c.cx) / c.fx;
  const double my = (p.y() - c.cy) / c.fy;
  const double r2 = mx * mx + my * my;
  const double inner = 1.0 - (2.0 * c.alpha - 1.0) * r2;
  if (inner < 0.0) return std::nullopt;  // r^2 > 1/(2 alpha - 1)
  const double mz =
      (1.0 - c.alpha * c.alpha * r2) / (c.alpha * std::sqrt(inner) + 1.0 - c.alpha);
  const double sq = mz * mz + (1.0 - c.xi * c.xi) * r2;
  if (sq < 0.0) return std::nullopt;
  const double factor = (mz * c.xi + std::sqrt(sq)) / (mz * mz + r2);
  // factor * (mx, my, mz) - (0,0,xi) lies on the first unit sphere.
  return Point3(factor * mx, factor * my, factor * mz - c.xi);
}

std::optional<Point3> unproject_ds(const DsParams& c, const Pixel& p, double range) {
  const auto dir = ds_direction(c, p);
  if (!dir) return std::nullopt;
  return range * *dir;
}

}  // namespace

// ---- dispatch --------------------------------------------------------------

std::optional<Pixel> try_project(const CameraModel& model, const Point3& P) noexcept {
  if (!P.allFinite()) return std::nullopt;
  return std::visit(
      [&](const auto& c) -> std::optional<Pixel> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PinholeParams>) return project_pinhole(c, P);
        else if constexpr (std::is_same_v<T, BrownConradyParams>) return project_brown(c, P);
        else if constexpr (std::is_same_v<T, UcmParams>) return project_ucm(c, P);
        else if constexpr (std::is_same_v<T, EucmParams>) return project_eucm(c, P);
        else return project_ds(c, P);
      },
      model);
}

std::optional<Point3> try_unproject(const CameraModel& model, const Pixel& p,
                                    double depth) noexcept {
  if (!(depth > 0.0) || !p.allFinite()) return std::nullopt;
  return std::visit(
      [&](const auto& c) -> std::optional<Point3> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PinholeParams>) return unproject_pinhole(c, p, depth);
        else if constexpr (std::is_same_v<T, BrownConradyParams>) return unproject_brown(c, p, depth);
        else if constexpr (std::is_same_v<T, UcmParams>) return unproject_ucm(c, p, depth);
        else if constexpr (std::is_same_v<T, EucmParams>) return unproject_eucm(c, p, depth);
        else return unproject_ds(c, p, depth);
      },
      model);
}

Pixel project(const CameraModel& model, const Point3& P) {
  if (auto px = try_project(model, P)) return *px;
  throw std::domain_error("project(" + model_tag(model) +
                          "): point outside projection domain (denominator or z <= eps)");
}

Point3 unproject(const CameraModel& model, const Pixel& p, double depth) {
  if (!(depth > 0.0))
    throw std::domain_error("unproject(" + model_tag(model) + "): depth must be > 0");
  if (auto P = try_unproject(model, p, depth)) return *P;
  if (std::holds_alternative<BrownConradyParams>(model))
    throw std::domain_error("unproject(brown): distortion inversion did not converge");
  throw std::domain_error("unproject(" + model_tag(model) +
                          "): pixel radius outside admissible domain");
}

Point3 ray_direction(const CameraModel& model, const Pixel& p) {
  const Point3 P = unproject(model, p, 1.0);
  return P.normalized();
}

Pixel distort(const BrownConradyParams& model, const Pixel& p_undistorted) {
  const PinholeParams& k = model.pinhole;
  const Eigen::Vector2d n((p_undistorted.x() - k.cx) / k.fx,
                          (p_undistorted.y() - k.cy) / k.fy);
  const Eigen::Vector2d d = distort_normalized(model, n);
  return {k.fx * d.x() + k.cx, k.fy * d.y() + k.cy};
}

double plane_depth_to_range(const CameraModel& model, const Pixel& p, double z) {
  const Point3 dir = ray_direction(model, p);
  if (dir.z() <= 0.0)
    throw std::domain_error("plane_depth_to_range: ray does not cross the z plane");
  return z / dir.z();
}

double range_to_plane_depth(const CameraModel& model, const Pixel& p, double range) {
  return range * ray_direction(model, p).z();
}

bool depth_is_range(const CameraModel& model) {
  return std::holds_alternative<UcmParams>(model) ||
         std::holds_alternative<EucmParams>(model) || std::holds_alternative<DsParams>(model);
}

int param_count(const CameraModel& model) {
  return static_cast<int>(get_params(model).size());
}

std::vector<std::string> param_names(const CameraModel& model) {
  return std::visit(
      [](const auto& c) -> std::vector<std::string> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PinholeParams>)
          return {"fx", "fy", "cx", "cy"};
        else if constexpr (std::is_same_v<T, BrownConradyParams>)
          return {"fx", "fy", "cx", "cy", "k1", "k2", "k3", "p1", "p2"};
        else if constexpr (std::is_same_v<T, UcmParams>)
          return {"fx", "fy", "cx", "cy", "alpha"};
        else if constexpr (std::is_same_v<T, EucmParams>)
          return {"fx", "fy", "cx", "cy", "alpha", "beta"};
        else
          return {"fx", "fy", "cx", "cy", "alpha", "xi"};
      },
      model);
}

Eigen::VectorXd get_params(const CameraModel& model) {
  return std::visit(
      [](const auto& c) -> Eigen::VectorXd {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PinholeParams>) {
          Eigen::Vector4d v(c.fx, c.fy, c.cx, c.cy);
          return v;
        } else if constexpr (std::is_same_v<T, BrownConradyParams>) {
          Eigen::VectorXd v(9);
          v << c.pinhole.fx, c.pinhole.fy, c.pinhole.cx, c.pinhole.cy, c.k1, c.k2, c.k3,
              c.p1, c.p2;
          return v;
        } else if constexpr (std::is_same_v<T, UcmParams>) {
          Eigen::VectorXd v(5);
          v << c.fx, c.fy, c.cx, c.cy, c.alpha;
          return v;
        } else if constexpr (std::is_same_v<T, EucmParams>) {
          Eigen::VectorXd v(6);
          v << c.fx, c.fy, c.cx, c.cy, c.alpha, c.beta;
          return v;
        } else {
          Eigen::VectorXd v(6);
          v << c.fx, c.fy, c.cx, c.cy, c.alpha, c.xi;
          return v;
        }
      },
      model);
}

CameraModel with_params(const CameraModel& model, const Eigen::VectorXd& params) {
  if (params.size() != get_params(model).size())
    throw std::invalid_argument("with_params: parameter count mismatch");
  return std::visit(
      [&](const auto& c) -> CameraModel {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PinholeParams>) {
          return PinholeParams{params(0), params(1), params(2), params(3)};
        } else if constexpr (std::is_same_v<T, BrownConradyParams>) {
          return BrownConradyParams{{params(0), params(1), params(2), params(3)},
                                    params(4), params(5), params(6), params(7), params(8)};
        } else if constexpr (std::is_same_v<T, UcmParams>) {
          return UcmParams{params(0), params(1), params(2), params(3), params(4)};
        } else if constexpr (std::is_same_v<T, EucmParams>) {
          return EucmParams{params(0), params(1), params(2), params(3), params(4), params(5)};
        } else {
          return DsParams{params(0), params(1), params(2), params(3), params(4), params(5)};
        }
      },
      model);
}

std::string model_tag(const CameraModel& model) {
  switch (model.index()) {
    case 0: return "pinhole";
    case 1: return "brown";
    case 2: return "ucm";
    case 3: return "eucm";
    default: return "ds";
  }
}

Eigen::Matrix3d intrinsic_matrix(const CameraModel& model) {
  const Eigen::VectorXd p = get_params(model);
  Eigen::Matrix3d K = Eigen::Matrix3d::Identity();
  K(0, 0) = p(0);
  K(1, 1) = p(1);
  K(0, 2) = p(2);
  K(1, 2) = p(3);
  return K;
}

void validate(const CameraModel& model) {
  const Eigen::VectorXd p = get_params(model);
  if (!p.allFinite()) throw std::invalid_argument("camera: non-finite parameter");
  if (p(0) <= 0 || p(1) <= 0)
    throw std::invalid_argument("camera: focal lengths must be positive");
  std::visit(
      [](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, UcmParams> || std::is_same_v<T, DsParams>) {
          if (c.alpha < 0.0 || c.alpha >= 1.0)
            throw std::invalid_argument("camera: alpha must lie in [0, 1)");
        } else if constexpr (std::is_same_v<T, EucmParams>) {
          if (c.alpha < 0.0 || c.alpha >= 1.0)
            throw std::invalid_argument("camera: alpha must lie in [0, 1)");
          if (!(c.beta > 0.0)) throw std::invalid_argument("camera: beta must be positive");
        }
      },
      model);
}

}  // namespace camgeom
