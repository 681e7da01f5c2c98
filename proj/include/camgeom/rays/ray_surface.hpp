// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <vector>

#include "camgeom/camera/models.hpp"
#include "camgeom/core/pose.hpp"

namespace camgeom {

// Non-parametric central camera: one unit viewing direction per pixel plus a
// shared origin. Pixel (u, v) indexes column u, row v; directions are stored
// row-major.
struct RaySurface {
  int width = 0, height = 0;
  std::vector<Point3> directions;  // size width * height, unit norm
  Point3 origin = Point3::Zero();

  size_t idx(int y, int x) const { return static_cast<size_t>(y) * width + x; }
  const Point3& dir(int y, int x) const { return directions[idx(y, x)]; }
  Point3& dir(int y, int x) { return directions[idx(y, x)]; }
};

// Ramp for blending a learned residual into a template surface:
// lambda(step) rises linearly from 0 at ramp_start to lambda_max at ramp_end
// and stays there (monotone non-decreasing).
struct ResidualSchedule {
  int ramp_start = 0;
  int ramp_end = 1;
  double lambda_max = 1.0;

  double lambda(int step) const;
};

// Temperature annealing for the softmax projection.
struct TauSchedule {
  enum class Kind { Exponential, Linear };
  Kind kind = Kind::Exponential;
  double tau0 = 1.0;
  double gamma = 0.95;    // exponential decay per step
  double rate = 1e-3;     // linear decrease per step
  double tau_min = 1e-4;  // floor
};

// Monotone non-increasing temperature; exponential tau0 * gamma^step or
// linear tau0 - rate*step, clamped at tau_min.
double anneal_tau(const TauSchedule& schedule, int step);

// Softmax projection window; patch dims odd.
struct SoftmaxConfig {
  double tau = 1e-3;
  int patch_h = 41;
  int patch_w = 41;
};

// Pinhole template: direction(v, u) = normalize(K^-1 [u, v, 1]), origin 0.
RaySurface template_from_pinhole(const PinholeParams& intrinsics, int height, int width);

// Per-pixel normalize(template + lambda_r * residual).
RaySurface compose_residual(const RaySurface& tmpl, const std::vector<Point3>& residual,
                            double lambda_r);

// origin + depth * direction(p); direction bilinearly interpolated and
// renormalized for non-integer pixels. Throws on out-of-grid p or depth <= 0.
Point3 unproject_rs(const RaySurface& surface, const Pixel& p, double depth);

// Exhaustive search for the pixel whose ray best aligns with P - origin
// (largest dot product); ties broken toward the smallest row-major index.
// A point behind every ray still returns the best (least negative) match.
Pixel project_argmax(const RaySurface& surface, const Point3& P);

// Batched argmax projection; parallel over queries, with a serial twin that
// produces bitwise-identical results.
std::vector<Pixel> project_argmax_batch(const RaySurface& surface,
                                        const std::vector<Point3>& points);
std::vector<Pixel> project_argmax_batch_serial(const RaySurface& surface,
                                               const std::vector<Point3>& points);

// Differentiable surrogate: softmax (temperature tau) over ray/point
// similarities inside the window centered at `anchor`, applied to pixel
// coordinates. The window is clipped at image borders; an anchor outside the
// grid is an error. Converges to the in-window argmax as tau -> 0.
Pixel project_softmax(const RaySurface& surface, const Point3& P, const SoftmaxConfig& cfg,
                      const Pixel& anchor);

struct RaySurfaceFitConfig {
  int max_iters = 300;
  double learning_rate = 0.8;
  double tol = 1e-12;  // on the mean-angular-error decrease
};

struct RaySurfaceFitResult {
  RaySurface surface;
  int iterations = 0;
  double mean_angular_error = 0.0;  // radians, over the correspondences
  bool converged = false;
};

// Fits a residual over `tmpl` by per-pixel gradient descent so that the
// composed surface matches the correspondence directions normalize(P - origin);
// the residual weight ramps per `schedule`. Correspondences are attributed to
// their nearest grid pixel. On non-convergence returns best-so-far with
// diagnostics (no throw).
RaySurfaceFitResult fit_ray_surface(const std::vector<std::pair<Pixel, Point3>>& corrs,
                                    int height, int width, const RaySurface& tmpl,
                                    const ResidualSchedule& schedule,
                                    const RaySurfaceFitConfig& cfg = {});

}  // namespace camgeom
