// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/rays/ray_surface.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "camgeom/parallel.hpp"

namespace camgeom {

double ResidualSchedule::lambda(int step) const {
  if (ramp_end <= ramp_start) return step >= ramp_end ? lambda_max : 0.0;
  const double s =
      (static_cast<double>(step) - ramp_start) / (static_cast<double>(ramp_end) - ramp_start);
  return lambda_max * std::clamp(s, 0.0, 1.0);
}

double anneal_tau(const TauSchedule& schedule, int step) {
  if (step < 0) throw std::invalid_argument("anneal_tau: step must be >= 0");
  double tau;
  if (schedule.kind == TauSchedule::Kind::Exponential)
    tau = schedule.tau0 * std::pow(schedule.gamma, step);
  else
    tau = schedule.tau0 - schedule.rate * step;
  return std::max(tau, schedule.tau_min);
}

RaySurface template_from_pinhole(const PinholeParams& intrinsics, int height, int width) {
  if (height <= 0 || width <= 0)
    throw std::invalid_argument("template_from_pinhole: empty grid");
  if (intrinsics.fx <= 0 || intrinsics.fy <= 0)
    throw std::invalid_argument("template_from_pinhole: focal lengths must be positive");
  RaySurface s;
  s.width = width;
  s.height = height;
  s.directions.resize(static_cast<size_t>(width) * height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      s.dir(y, x) = Point3((x - intrinsics.cx) / intrinsics.fx,
                           (y - intrinsics.cy) / intrinsics.fy, 1.0)
                        .normalized();
  return s;
}

RaySurface compose_residual(const RaySurface& tmpl, const std::vector<Point3>& residual,
                            double lambda_r) {
  if (residual.size() != tmpl.directions.size())
    throw std::invalid_argument("compose_residual: residual shape mismatch");
  RaySurface out = tmpl;
  for (size_t i = 0; i < residual.size(); ++i) {
    const Point3 v = tmpl.directions[i] + lambda_r * residual[i];
    const double n = v.norm();
    if (n < 1e-15)
      throw std::invalid_argument("compose_residual: residual cancels a template ray");
    out.directions[i] = v / n;
  }
  return out;
}

Point3 unproject_rs(const RaySurface& surface, const Pixel& p, double depth) {
  if (!(depth > 0.0)) throw std::domain_error("unproject_rs: depth must be > 0");
  if (!(p.x() >= 0.0) || !(p.y() >= 0.0) || !(p.x() <= surface.width - 1.0) ||
      !(p.y() <= surface.height - 1.0))
    throw std::domain_error("unproject_rs: pixel outside the grid");
  const int x0 = std::min(static_cast<int>(std::floor(p.x())), surface.width - 1);
  const int y0 = std::min(static_cast<int>(std::floor(p.y())), surface.height - 1);
  const int x1 = std::min(x0 + 1, surface.width - 1);
  const int y1 = std::min(y0 + 1, surface.height - 1);
  const double fx = p.x() - x0, fy = p.y() - y0;
  const Point3 d = (1 - fy) * ((1 - fx) * surface.dir(y0, x0) + fx * surface.dir(y0, x1)) +
                   fy * ((1 - fx) * surface.dir(y1, x0) + fx * surface.dir(y1, x1));
  return surface.origin + depth * d.normalized();
}

namespace {

Pixel argmax_one(const RaySurface& surface, const Point3& P) {
  const Point3 target = (P - surface.origin).normalized();
  size_t best = 0;
  double best_dot = -2.0;
  const size_t n = surface.directions.size();
  for (size_t i = 0; i < n; ++i) {
    const double d = surface.directions[i].dot(target);
    if (d > best_dot) {  // strict: ties keep the smallest row-major index
      best_dot = d;
      best = i;
    }
  }
  return {static_cast<double>(best % surface.width), static_cast<double>(best / surface.width)};
}

std::vector<Pixel> argmax_batch_impl(const RaySurface& surface,
                                     const std::vector<Point3>& points, bool parallel) {
  std::vector<Pixel> out(points.size());
  for_each_index(static_cast<long>(points.size()), parallel,
                 [&](long i) { out[i] = argmax_one(surface, points[i]); });
  return out;
}

}  // namespace

Pixel project_argmax(const RaySurface& surface, const Point3& P) {
  if ((P - surface.origin).norm() == 0.0)
    throw std::domain_error("project_argmax: point coincides with the origin");
  return argmax_one(surface, P);
}

std::vector<Pixel> project_argmax_batch(const RaySurface& surface,
                                        const std::vector<Point3>& points) {
  return argmax_batch_impl(surface, points, true);
}

std::vector<Pixel> project_argmax_batch_serial(const RaySurface& surface,
                                               const std::vector<Point3>& points) {
  return argmax_batch_impl(surface, points, false);
}

Pixel project_softmax(const RaySurface& surface, const Point3& P, const SoftmaxConfig& cfg,
                      const Pixel& anchor) {
  if (!(cfg.tau > 0.0)) throw std::invalid_argument("project_softmax: tau must be > 0");
  if (cfg.patch_h <= 0 || cfg.patch_w <= 0 || cfg.patch_h % 2 == 0 || cfg.patch_w % 2 == 0)
    throw std::invalid_argument("project_softmax: patch dims must be odd and positive");
  const int ax = static_cast<int>(std::lround(anchor.x()));
  const int ay = static_cast<int>(std::lround(anchor.y()));
  if (ax < 0 || ay < 0 || ax >= surface.width || ay >= surface.height)
    throw std::domain_error("project_softmax: window fully off-grid (anchor outside image)");
  const int x0 = std::max(0, ax - cfg.patch_w / 2);
  const int x1 = std::min(surface.width - 1, ax + cfg.patch_w / 2);
  const int y0 = std::max(0, ay - cfg.patch_h / 2);
  const int y1 = std::min(surface.height - 1, ay + cfg.patch_h / 2);

  const Point3 target = (P - surface.origin).normalized();
  // Stabilized softmax over the window similarities.
  double max_sim = -2.0;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x)
      max_sim = std::max(max_sim, surface.dir(y, x).dot(target));
  double wsum = 0.0, usum = 0.0, vsum = 0.0;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      const double w = std::exp((surface.dir(y, x).dot(target) - max_sim) / cfg.tau);
      wsum += w;
      usum += w * x;
      vsum += w * y;
    }
  return {usum / wsum, vsum / wsum};
}

}  // namespace camgeom
