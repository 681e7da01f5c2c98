// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <stdexcept>

#include "camgeom/scan/panorama.hpp"

namespace camgeom {

double pano_azimuth(const Panorama& pano, int u) {
  return ((u + 0.5) / pano.width() * 360.0 - 180.0) * M_PI / 180.0;
}

double pano_elevation(const Panorama& pano, int v) {
  const double span = pano.el_max_deg - pano.el_min_deg;
  return (pano.el_max_deg - (v + 0.5) / pano.height() * span) * M_PI / 180.0;
}

Point3 direction_from_angles(double azimuth, double elevation) {
  const double ce = std::cos(elevation);
  return Point3(ce * std::cos(azimuth), ce * std::sin(azimuth), std::sin(elevation));
}

Point3 pano_direction(const Panorama& pano, int u, int v) {
  return direction_from_angles(pano_azimuth(pano, u), pano_elevation(pano, v));
}

PointGrid pano_to_points(const Panorama& pano) {
  if (pano.rgb.width != pano.range.width || pano.rgb.height != pano.range.height) {
    throw std::invalid_argument("pano_to_points: rgb/range shape mismatch");
  }
  PointGrid grid;
  grid.width = pano.width();
  grid.height = pano.height();
  grid.points.resize(static_cast<size_t>(grid.width) * grid.height, Point3::Zero());
  grid.valid.resize(grid.points.size(), 0);
  for (int v = 0; v < grid.height; ++v) {
    for (int u = 0; u < grid.width; ++u) {
      if (!pano.range.is_valid(v, u)) continue;
      grid.points[grid.idx(v, u)] = pano_direction(pano, u, v) * pano.range.at(v, u);
      grid.valid[grid.idx(v, u)] = 1;
    }
  }
  return grid;
}

}  // namespace camgeom
