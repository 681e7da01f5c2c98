// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "camgeom/camera/models.hpp"
#include "camgeom/core/pose.hpp"

namespace camgeom {

// 2D-3D correspondences of one view: points in the target frame with their
// observed pixels, plus an optional initial camera pose.
struct ViewCorrespondences {
  std::vector<std::pair<Point3, Pixel>> pairs;
  std::optional<Pose> initial_pose;
};

struct CorrespondenceSet {
  std::vector<ViewCorrespondences> views;

  int total_pairs() const {
    int n = 0;
    for (const auto& v : views) n += static_cast<int>(v.pairs.size());
    return n;
  }
};

struct OptimizerConfig {
  int max_iters = 200;
  double initial_damping = 1e-3;
  double damping_up = 10.0;
  double damping_down = 0.1;
  double step_tol = 1e-10;   // on the parameter-step norm
  double cost_tol = 1e-12;   // on the relative objective decrease
  uint64_t seed = 0;
};

// Both flavors of the reprojection statistic: the mean of squared pixel
// residuals (px^2) and its square root (RMS, px). `excluded` counts pairs
// whose point could not be projected; they do not enter the sums.
struct ReprojectionStats {
  double mean_sq = 0.0;
  double rms = 0.0;
  int excluded = 0;
  int total = 0;
};

struct CalibrationResult {
  CameraModel model;
  std::vector<Pose> poses;
  double mre = 0.0;          // RMS reprojection error (pixels)
  double mean_sq_error = 0.0;  // mean of squared residual norms (px^2)
  int iterations = 0;        // accepted optimizer steps
  bool converged = false;
};

// Direct linear transform: least-squares 3x4 projection matrix M with
// lambda p = M P from >= 6 non-coplanar pairs, Hartley-style normalization
// on both sides, ||M||_F = 1 with a deterministic sign. Throws on < 6 pairs,
// coplanar points, or a rank-deficient design matrix.
Eigen::Matrix<double, 3, 4> dlt_projection_matrix(const ViewCorrespondences& view);

// RQ decomposition of M's leading 3x3 block into K (upper triangular,
// positive diagonal, K(2,2) = 1) and a Pose with det(R) = +1.
std::pair<Eigen::Matrix3d, Pose> decompose_projection(const Eigen::Matrix<double, 3, 4>& M);

// Mean reprojection error of `model` under per-view `poses` over all pairs:
// (1/N) sum ||project(P) - p||^2, reported with its RMS. Unprojectable
// points are excluded and counted.
ReprojectionStats mean_reprojection_error(const CameraModel& model,
                                          const std::vector<Pose>& poses,
                                          const CorrespondenceSet& corrs);

// Joint Levenberg-Marquardt over intrinsics + per-view poses minimizing the
// mean squared reprojection error. Pose updates use axis-angle increments on
// the rotation manifold. Views without an initial pose are initialized by
// DLT+decompose (pinhole family) or a coarse look-at grid search over
// azimuth/elevation/radius around the target centroid followed by pose-only
// refinement (sphere-family models, where DLT does not apply). Trial steps
// that push a point out of the projection domain are rejected with increased
// damping; the accepted-step cost is non-increasing.
CalibrationResult refine(const CameraModel& model_init, const CorrespondenceSet& corrs,
                         const OptimizerConfig& cfg = {});

struct PerturbationReport {
  CalibrationResult result;
  Eigen::VectorXd recovered;       // parameters after refinement
  Eigen::VectorXd truth;           // reference parameters
  Eigen::VectorXd relative_error;  // |recovered - truth| / |truth|
  double factor = 1.0;
};

// Self-calibration recovery experiment: initializes every intrinsic at
// factor * truth, refines against the correspondences, and reports
// per-parameter relative errors.
PerturbationReport perturb_and_recover(const CameraModel& model_true,
                                       const CorrespondenceSet& corrs, double factor,
                                       const OptimizerConfig& cfg = {});

// Pose-only LM refinement of a single view at fixed intrinsics.
Pose refine_pose(const CameraModel& model, const ViewCorrespondences& view,
                 const Pose& init, const OptimizerConfig& cfg = {});

}  // namespace camgeom
