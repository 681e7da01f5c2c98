// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "camgeom/parallel.hpp"
#include "camgeom/scan/crop.hpp"

namespace camgeom {

namespace {

constexpr int kNearestCount = 5;
constexpr double kDepthConeDeg = 0.5;
// Slack added to the angular pruning bounds so floating-point rounding can
// never discard a pixel the exhaustive search would keep.
constexpr double kBoundMargin = 1e-12;

struct Candidate {
  double dot;
  size_t index;  // row-major pano index; breaks exact ties deterministically
};

inline bool better(const Candidate& a, const Candidate& b) {
  if (a.dot != b.dot) return a.dot > b.dot;
  return a.index < b.index;
}

// Fixed-capacity ordered top-K set.
struct TopK {
  Candidate items[kNearestCount];
  int count = 0;

  void offer(const Candidate& c) {
    if (count < kNearestCount) {
      items[count++] = c;
      for (int i = count - 1; i > 0 && better(items[i], items[i - 1]); --i) {
        std::swap(items[i], items[i - 1]);
      }
      return;
    }
    if (!better(c, items[kNearestCount - 1])) return;
    items[kNearestCount - 1] = c;
    for (int i = kNearestCount - 1; i > 0 && better(items[i], items[i - 1]); --i) {
      std::swap(items[i], items[i - 1]);
    }
  }

  // Worst accepted dot, or -2 while the set is not yet full (accept all).
  double floor_dot() const { return count < kNearestCount ? -2.0 : items[kNearestCount - 1].dot; }
  bool full() const { return count == kNearestCount; }
};

Pose crop_orientation(const CropSpec& spec) {
  const Point3 target = direction_from_angles(spec.azimuth_deg * M_PI / 180.0,
                                              spec.elevation_deg * M_PI / 180.0);
  return look_at_pose(Point3::Zero(), target);
}

Point3 crop_ray_with(const Pose& orientation, const PinholeParams& K, double x, double y) {
  const Point3 cam((x - K.cx) / K.fx, (y - K.cy) / K.fy, 1.0);
  return (orientation.R.transpose() * cam).normalized();
}

double robust_mean_central80(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  const size_t k = values.size();
  const size_t drop = k / 10;  // floor(0.1 k) from each end
  double sum = 0.0;
  for (size_t i = drop; i < k - drop; ++i) sum += values[i];
  return sum / static_cast<double>(k - 2 * drop);
}

struct PanoTables {
  std::vector<Point3> dirs;       // unit direction per pano pixel
  std::vector<double> sin_el, cos_el;  // per row
  std::vector<double> az;              // per column
};

PanoTables build_tables(const Panorama& pano) {
  const int W = pano.width(), H = pano.height();
  PanoTables t;
  t.dirs.resize(static_cast<size_t>(W) * H);
  t.sin_el.resize(H);
  t.cos_el.resize(H);
  t.az.resize(W);
  for (int v = 0; v < H; ++v) {
    const double el = pano_elevation(pano, v);
    t.sin_el[v] = std::sin(el);
    t.cos_el[v] = std::cos(el);
  }
  for (int u = 0; u < W; ++u) t.az[u] = pano_azimuth(pano, u);
  for (int v = 0; v < H; ++v) {
    for (int u = 0; u < W; ++u) {
      t.dirs[static_cast<size_t>(v) * W + u] = pano_direction(pano, u, v);
    }
  }
  return t;
}

// Expanding angular-window scan around the query direction. Visits enough
// of the panorama to guarantee (a) the exact top-5 by angular distance and
// (b) every return within the fixed depth cone; elevation bounds the
// angular distance from below, so rows (and, within a row, azimuth offsets)
// can be pruned once their best achievable dot falls below what is already
// banked.
void scan_query(const Panorama& pano, const PanoTables& t, const Point3& q, TopK& top,
                std::vector<double>& cone_ranges) {
  const int W = pano.width(), H = pano.height();
  const double el_q = std::asin(std::clamp(q.z(), -1.0, 1.0));
  const double az_q = std::atan2(q.y(), q.x());
  const double sin_q = std::sin(el_q), cos_q = std::cos(el_q);
  const double cone_dot = std::cos(kDepthConeDeg * M_PI / 180.0);
  const double az_step = 2.0 * M_PI / W;

  // Row index whose center elevation is nearest to the query's.
  const double span = (pano.el_max_deg - pano.el_min_deg) * M_PI / 180.0;
  double vf = (pano.el_max_deg * M_PI / 180.0 - el_q) / span * H - 0.5;
  int v0 = static_cast<int>(std::lround(vf));
  v0 = std::clamp(v0, 0, H - 1);

  const auto scan_row = [&](int v) -> bool {
    // Upper bound on any dot in this row (azimuth ignored).
    const double row_bound = sin_q * t.sin_el[v] + cos_q * t.cos_el[v];
    const bool row_can_rgb = row_bound + kBoundMargin >= top.floor_dot();
    const bool row_can_cone = row_bound + kBoundMargin >= cone_dot;
    if (!row_can_rgb && !row_can_cone) return false;

    // Column whose center azimuth is nearest; az_q from atan2 lies in
    // [-pi, pi], so az_q + pi needs no wrapping before the index map.
    const double uf = (az_q + M_PI) / az_step - 0.5;
    int u0 = static_cast<int>(std::lround(uf));
    u0 = ((u0 % W) + W) % W;

    // Offsets 0..floor(W/2) on both sides cover every column exactly once
    // (the shared antipodal column at even W is skipped below).
    const int max_du = W / 2;
    for (int du = 0; du <= max_du; ++du) {
      // Remaining columns at offset >= du are at least this far in azimuth.
      const double az_lower = std::max(0.0, du * az_step - 0.5 * az_step);
      const double off_bound =
          sin_q * t.sin_el[v] + cos_q * t.cos_el[v] * std::cos(std::min(az_lower, M_PI));
      const bool can_rgb = off_bound + kBoundMargin >= top.floor_dot();
      const bool can_cone = off_bound + kBoundMargin >= cone_dot;
      if (!can_rgb && !can_cone) break;

      for (int side = 0; side < (du == 0 ? 1 : 2); ++side) {
        int u = (side == 0) ? u0 + du : u0 - du;
        u = ((u % W) + W) % W;
        if (du * 2 == W && side == 1) continue;  // same column twice
        const size_t idx = static_cast<size_t>(v) * W + u;
        const double dot = q.dot(t.dirs[idx]);
        top.offer({dot, idx});
        if (dot >= cone_dot && pano.range.valid[idx]) {
          cone_ranges.push_back(pano.range.depth[idx]);
        }
      }
    }
    return true;
  };

  bool up_open = true, down_open = true;
  for (int dv = 0; up_open || down_open; ++dv) {
    bool any = false;
    if (dv == 0) {
      any = scan_row(v0);
      up_open = down_open = any;
      if (!any) break;
      continue;
    }
    if (down_open) {
      const int v = v0 + dv;
      if (v >= H) {
        down_open = false;
      } else if (!scan_row(v)) {
        down_open = false;
      } else {
        any = true;
      }
    }
    if (up_open) {
      const int v = v0 - dv;
      if (v < 0) {
        up_open = false;
      } else if (!scan_row(v)) {
        up_open = false;
      } else {
        any = true;
      }
    }
    (void)any;
  }
}

Crop extract_crop_impl(const Panorama& pano, const CropSpec& spec, bool parallel) {
  if (spec.width <= 0 || spec.height <= 0 || spec.fov_h_deg <= 0.0 || spec.fov_v_deg <= 0.0) {
    throw std::invalid_argument("extract_crop: non-positive crop size or field of view");
  }
  if (pano.rgb.width != pano.range.width || pano.rgb.height != pano.range.height ||
      pano.width() <= 0) {
    throw std::invalid_argument("extract_crop: malformed panorama");
  }

  const PinholeParams K = crop_intrinsics(spec);
  const Pose orientation = crop_orientation(spec);

  // Coverage check on every crop ray before any resampling work.
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      const Point3 q = crop_ray_with(orientation, K, x, y);
      const double el_deg = std::asin(std::clamp(q.z(), -1.0, 1.0)) * 180.0 / M_PI;
      if (el_deg < pano.el_min_deg - 1e-9 || el_deg > pano.el_max_deg + 1e-9) {
        throw std::invalid_argument("extract_crop: crop ray leaves panorama elevation coverage");
      }
    }
  }

  const PanoTables tables = build_tables(pano);
  Crop crop;
  crop.intrinsics = K;
  crop.image = ImageBuffer(spec.width, spec.height, 0.0);
  crop.depth = DepthMap(spec.width, spec.height);

  for_each_pixel(spec.height, spec.width, parallel, [&](int y, int x) {
    const Point3 q = crop_ray_with(orientation, K, x, y);
    TopK top;
    std::vector<double> cone_ranges;
    scan_query(pano, tables, q, top, cone_ranges);

    if (top.count > 0) {
      double rgb[3] = {0.0, 0.0, 0.0};
      for (int k = 0; k < top.count; ++k) {
        const size_t idx = top.items[k].index;
        const int pv = static_cast<int>(idx / pano.width());
        const int pu = static_cast<int>(idx % pano.width());
        for (int c = 0; c < 3; ++c) rgb[c] += pano.rgb.at(pv, pu, c);
      }
      for (int c = 0; c < 3; ++c) crop.image.at(y, x, c) = rgb[c] / top.count;
    }
    if (!cone_ranges.empty()) {
      crop.depth.set(y, x, robust_mean_central80(cone_ranges));
    }
  });
  return crop;
}

}  // namespace

PinholeParams crop_intrinsics(const CropSpec& spec) {
  PinholeParams K;
  K.fx = (spec.width / 2.0) / std::tan(spec.fov_h_deg * M_PI / 360.0);
  K.fy = (spec.height / 2.0) / std::tan(spec.fov_v_deg * M_PI / 360.0);
  K.cx = (spec.width - 1) / 2.0;
  K.cy = (spec.height - 1) / 2.0;
  return K;
}

Point3 crop_ray(const CropSpec& spec, double x, double y) {
  return crop_ray_with(crop_orientation(spec), crop_intrinsics(spec), x, y);
}

Crop extract_crop(const Panorama& pano, const CropSpec& spec) {
  return extract_crop_impl(pano, spec, true);
}

Crop extract_crop_serial(const Panorama& pano, const CropSpec& spec) {
  return extract_crop_impl(pano, spec, false);
}

DepthMap crop_range_to_plane(const DepthMap& range, const PinholeParams& K) {
  DepthMap out(range.width, range.height);
  for (int y = 0; y < range.height; ++y) {
    for (int x = 0; x < range.width; ++x) {
      if (!range.is_valid(y, x)) continue;
      const double xn = (x - K.cx) / K.fx, yn = (y - K.cy) / K.fy;
      const double cos_off = 1.0 / std::sqrt(1.0 + xn * xn + yn * yn);
      out.set(y, x, range.at(y, x) * cos_off);
    }
  }
  return out;
}

DepthMap crop_plane_to_range(const DepthMap& plane, const PinholeParams& K) {
  DepthMap out(plane.width, plane.height);
  for (int y = 0; y < plane.height; ++y) {
    for (int x = 0; x < plane.width; ++x) {
      if (!plane.is_valid(y, x)) continue;
      const double xn = (x - K.cx) / K.fx, yn = (y - K.cy) / K.fy;
      out.set(y, x, plane.at(y, x) * std::sqrt(1.0 + xn * xn + yn * yn));
    }
  }
  return out;
}

}  // namespace camgeom
