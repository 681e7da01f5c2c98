// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "camgeom/parallel.hpp"
#include "camgeom/scan/normals.hpp"

namespace camgeom {

namespace {

// splitmix64 step; the standard 64-bit finalizer.
uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Inlier distance threshold: linear in range between 0.2 mm at 1 m and
// 6 cm at 300 m, clamped outside the anchors.
double adaptive_threshold(double range) {
  const double lo_r = 1.0, hi_r = 300.0;
  const double lo_t = 0.0002, hi_t = 0.06;
  const double t = lo_t + (hi_t - lo_t) * (range - lo_r) / (hi_r - lo_r);
  return std::clamp(t, lo_t, hi_t);
}

Point3 componentwise_median(const std::vector<Point3>& pts) {
  std::vector<double> axis(pts.size());
  Point3 m;
  for (int k = 0; k < 3; ++k) {
    for (size_t i = 0; i < pts.size(); ++i) axis[i] = pts[i](k);
    std::sort(axis.begin(), axis.end());
    const size_t n = axis.size();
    m(k) = (n % 2 == 1) ? axis[n / 2] : 0.5 * (axis[n / 2 - 1] + axis[n / 2]);
  }
  return m;
}

Point3 normal_for_pixel(const PointGrid& grid, int y, int x, const NormalsConfig& cfg) {
  const int half = cfg.window / 2;
  std::vector<Point3> pts;
  pts.reserve(static_cast<size_t>(cfg.window) * cfg.window);
  for (int dy = -half; dy <= half; ++dy) {
    const int yy = y + dy;
    if (yy < 0 || yy >= grid.height) continue;
    for (int dx = -half; dx <= half; ++dx) {
      const int xx = x + dx;
      if (xx < 0 || xx >= grid.width) continue;
      if (grid.is_valid(yy, xx)) pts.push_back(grid.points[grid.idx(yy, xx)]);
    }
  }
  const int n = static_cast<int>(pts.size());
  if (n < 3) return Point3::Zero();

  const Point3 anchor = componentwise_median(pts);
  const double thr = adaptive_threshold(anchor.norm());

  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(grid.idx(y, x) + 1)));
  std::uniform_int_distribution<int> pick(0, n - 1);

  int best_count = 0;
  Point3 best_normal = Point3::Zero();
  for (int it = 0; it < cfg.iterations; ++it) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || a == c || b == c) continue;
    Point3 nrm = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
    const double len = nrm.norm();
    if (len < 1e-12) continue;
    nrm /= len;
    int count = 0;
    for (const auto& p : pts) {
      if (std::abs(nrm.dot(p - anchor)) < thr) ++count;
    }
    if (count > best_count) {
      best_count = count;
      best_normal = nrm;
    }
  }
  if (static_cast<double>(best_count) < cfg.accept_fraction * n) return Point3::Zero();

  // Least-squares refinement over the winning inlier set, keeping the
  // median anchor: smallest-eigenvalue direction of the anchored scatter.
  Eigen::Matrix3d S = Eigen::Matrix3d::Zero();
  int inliers = 0;
  for (const auto& p : pts) {
    if (std::abs(best_normal.dot(p - anchor)) < thr) {
      const Point3 d = p - anchor;
      S += d * d.transpose();
      ++inliers;
    }
  }
  Point3 refined = best_normal;
  if (inliers >= 3) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(S);
    const Point3 cand = eig.eigenvectors().col(0);
    if (cand.norm() > 0.5) refined = cand.normalized();
  }
  // Face the origin: n . (origin - point) > 0.
  if (refined.dot(anchor) > 0.0) refined = -refined;
  return refined;
}

NormalGrid estimate_normals_impl(const PointGrid& grid, const NormalsConfig& cfg,
                                 bool parallel) {
  if (cfg.window < 3 || cfg.window % 2 == 0) {
    throw std::invalid_argument("estimate_normals: window must be odd and >= 3");
  }
  NormalGrid out;
  out.width = grid.width;
  out.height = grid.height;
  out.normals.resize(static_cast<size_t>(grid.width) * grid.height, Point3::Zero());
  for_each_pixel(grid.height, grid.width, parallel, [&](int y, int x) {
    out.normals[out.idx(y, x)] = normal_for_pixel(grid, y, x, cfg);
  });
  return out;
}

}  // namespace

NormalGrid estimate_normals(const PointGrid& grid, const NormalsConfig& cfg) {
  return estimate_normals_impl(grid, cfg, true);
}

NormalGrid estimate_normals_serial(const PointGrid& grid, const NormalsConfig& cfg) {
  return estimate_normals_impl(grid, cfg, false);
}

}  // namespace camgeom
