// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <stdexcept>

#include "camgeom/parallel.hpp"
#include "camgeom/rays/ray_surface.hpp"

namespace camgeom {

namespace {

struct PixelTargets {
  std::vector<Point3> dirs;  // unit target directions attributed to this pixel
};

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

}  // namespace

RaySurfaceFitResult fit_ray_surface(const std::vector<std::pair<Pixel, Point3>>& corrs,
                                    int height, int width, const RaySurface& tmpl,
                                    const ResidualSchedule& schedule,
                                    const RaySurfaceFitConfig& cfg) {
  if (tmpl.width != width || tmpl.height != height)
    throw std::invalid_argument("fit_ray_surface: template shape mismatch");
  if (corrs.empty()) throw std::invalid_argument("fit_ray_surface: no correspondences");

  // Attribute each correspondence to its nearest grid pixel.
  std::vector<PixelTargets> targets(static_cast<size_t>(width) * height);
  for (const auto& [p, P] : corrs) {
    const int x = static_cast<int>(std::lround(p.x()));
    const int y = static_cast<int>(std::lround(p.y()));
    if (x < 0 || y < 0 || x >= width || y >= height)
      throw std::invalid_argument("fit_ray_surface: correspondence pixel outside the grid");
    const Point3 d = P - tmpl.origin;
    if (d.norm() == 0.0)
      throw std::invalid_argument("fit_ray_surface: correspondence point at the origin");
    targets[tmpl.idx(y, x)].dirs.push_back(d.normalized());
  }

  std::vector<Point3> residual(targets.size(), Point3::Zero());
  const long n_px = static_cast<long>(targets.size());

  auto mean_angular_error = [&](double lambda) {
    double sum = 0.0;
    size_t count = 0;
    for (size_t i = 0; i < targets.size(); ++i) {
      if (targets[i].dirs.empty()) continue;
      const Point3 dir = (tmpl.directions[i] + lambda * residual[i]).normalized();
      for (const Point3& t : targets[i].dirs) {
        sum += clamped_acos(dir.dot(t));
        ++count;
      }
    }
    return count ? sum / count : 0.0;
  };

  double prev_err = mean_angular_error(schedule.lambda(0));
  int iters = 0;
  bool converged = false;
  for (int k = 0; k < cfg.max_iters; ++k) {
    const double lambda = schedule.lambda(k);
    ++iters;
    if (lambda > 0.0) {
      // Per-pixel descent step on 1 - <normalize(Q0 + lambda Qr), t>,
      // averaged over the pixel's targets. The fit itself stays
      // single-threaded; callers may run independent fits concurrently.
      for_each_index(n_px, false, [&](long i) {
        const auto& dirs = targets[i].dirs;
        if (dirs.empty()) return;
        const Point3 v = tmpl.directions[i] + lambda * residual[i];
        const double norm = v.norm();
        if (norm < 1e-15) return;
        const Point3 n = v / norm;
        Point3 grad = Point3::Zero();
        for (const Point3& t : dirs) grad -= (t - n * n.dot(t)) / norm;
        grad *= lambda / static_cast<double>(dirs.size());
        residual[i] -= cfg.learning_rate * grad;
      });
    }
    const double err = mean_angular_error(schedule.lambda(k + 1));
    // Converged once the error stops improving after the ramp is complete.
    if (schedule.lambda(k + 1) >= schedule.lambda_max &&
        std::abs(prev_err - err) < cfg.tol) {
      prev_err = err;
      converged = true;
      break;
    }
    prev_err = err;
  }

  RaySurfaceFitResult result;
  result.surface = compose_residual(tmpl, residual, schedule.lambda_max);
  result.iterations = iters;
  result.mean_angular_error = mean_angular_error(schedule.lambda_max);
  result.converged = converged;
  return result;
}

}  // namespace camgeom
