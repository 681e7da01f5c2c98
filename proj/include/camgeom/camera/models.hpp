// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "camgeom/core/pose.hpp"

namespace camgeom {

// Parametric camera family: pinhole, Brown-Conrady distortion, and the
// sphere-based unified models (UCM / EUCM / Double Sphere).
//
// Depth conventions, used consistently across the library:
//   * pinhole / brown: `depth` is plane depth Z (distance along the optical
//     axis); unproject(p, Z) returns the point with z = Z.
//   * ucm / eucm / ds: `depth` is Euclidean range along the viewing ray;
//     unproject(p, d) returns d * unit_direction(p).
// plane_depth_to_range / range_to_plane_depth convert between the two.

struct PinholeParams {
  double fx, fy;  // focal lengths (pixels)
  double cx, cy;  // principal point (pixels)
};

struct BrownConradyParams {
  PinholeParams pinhole;
  double k1, k2, k3;  // radial coefficients
  double p1, p2;      // tangential coefficients
};

struct UcmParams {
  double fx, fy, cx, cy;
  double alpha;  // in [0, 1)
};

struct EucmParams {
  double fx, fy, cx, cy;
  double alpha;  // in [0, 1)
  double beta;   // > 0
};

struct DsParams {
  double fx, fy, cx, cy;
  double alpha;  // in [0, 1)
  double xi;
};

using CameraModel =
    std::variant<PinholeParams, BrownConradyParams, UcmParams, EucmParams, DsParams>;

// Smallest admissible projection denominator / z.
inline constexpr double kProjectionEps = 1e-9;

// ---- projection / unprojection --------------------------------------------

// Non-throwing fast paths for per-pixel kernels; nullopt on domain violation.
std::optional<Pixel> try_project(const CameraModel& model, const Point3& P) noexcept;
std::optional<Point3> try_unproject(const CameraModel& model, const Pixel& p,
                                    double depth) noexcept;

// Checked variants; throw std::domain_error naming the violated condition.
Pixel project(const CameraModel& model, const Point3& P);
Point3 unproject(const CameraModel& model, const Pixel& p, double depth);

// Unit viewing direction through a pixel (camera frame).
Point3 ray_direction(const CameraModel& model, const Pixel& p);

// Forward Brown-Conrady distortion of an undistorted pinhole pixel:
// moves to normalized coordinates, applies radial
// (1 + k1 r^2 + k2 r^4 + k3 r^6) and tangential terms with
// r^2 = x_n^2 + y_n^2 of the undistorted normalized point, maps back.
Pixel distort(const BrownConradyParams& model, const Pixel& p_undistorted);

// Depth-convention converters for a given pixel's viewing ray.
double plane_depth_to_range(const CameraModel& model, const Pixel& p, double z);
double range_to_plane_depth(const CameraModel& model, const Pixel& p, double range);

// True when the model's `depth` argument means Euclidean range.
bool depth_is_range(const CameraModel& model);

// ---- parameter plumbing (used by calibration) ------------------------------

// Column/entry order per variant:
//   pinhole: fx fy cx cy
//   brown:   fx fy cx cy k1 k2 k3 p1 p2
//   ucm:     fx fy cx cy alpha
//   eucm:    fx fy cx cy alpha beta
//   ds:      fx fy cx cy alpha xi
int param_count(const CameraModel& model);
std::vector<std::string> param_names(const CameraModel& model);
Eigen::VectorXd get_params(const CameraModel& model);
CameraModel with_params(const CameraModel& model, const Eigen::VectorXd& params);
std::string model_tag(const CameraModel& model);

// 3x3 intrinsic matrix of the model's pinhole part.
Eigen::Matrix3d intrinsic_matrix(const CameraModel& model);

// d(projection)/d(params), 2 x param_count, by central finite differences
// with per-parameter step h = max(1e-6, 1e-6 * |theta|). Column order as in
// get_params. Throws if a perturbed parameter leaves the projection domain.
Eigen::Matrix<double, 2, Eigen::Dynamic> param_jacobian(const CameraModel& model,
                                                        const Point3& P);

// Throws std::invalid_argument when a variant violates its parameter
// invariants (fx,fy > 0; alpha in [0,1); beta > 0).
void validate(const CameraModel& model);

}  // namespace camgeom
