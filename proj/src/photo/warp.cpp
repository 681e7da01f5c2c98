// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>

#include "camgeom/parallel.hpp"
#include "camgeom/photo/warp.hpp"

namespace camgeom {

namespace {

WarpField warp_coords_impl(const DepthMap& depth, const Pose& pose, const CameraModel& cam_t,
                           const CameraModel& cam_c, int ctx_width, int ctx_height,
                           bool parallel) {
  const int W = depth.width, H = depth.height;
  const int cw = ctx_width > 0 ? ctx_width : W;
  const int ch = ctx_height > 0 ? ctx_height : H;
  WarpField field(W, H);
  for_each_pixel(H, W, parallel, [&](int y, int x) {
    const size_t i = field.idx(y, x);
    if (!depth.is_valid(y, x)) return;
    const auto P = try_unproject(cam_t, Pixel(x, y), depth.at(y, x));
    if (!P) return;
    const auto p = try_project(cam_c, pose * (*P));
    if (!p) return;
    const double u = p->x(), v = p->y();
    if (u < 0.0 || u > cw - 1.0 || v < 0.0 || v > ch - 1.0) return;
    field.u[i] = u;
    field.v[i] = v;
    field.valid[i] = 1;
  });
  return field;
}

SampledImage sample_bilinear_impl(const ImageBuffer& src, const WarpField& field, bool parallel) {
  SampledImage out;
  out.image = ImageBuffer(field.width, field.height, 0.0);
  out.mask = MaskImage(field.width, field.height, false);
  for_each_pixel(field.height, field.width, parallel, [&](int y, int x) {
    const size_t i = field.idx(y, x);
    if (!field.valid[i]) return;
    double rgb[3];
    if (!sample_bilinear_at(src, field.u[i], field.v[i], rgb)) return;
    for (int c = 0; c < 3; ++c) out.image.at(y, x, c) = rgb[c];
    out.mask.set(y, x, true);
  });
  return out;
}

}  // namespace

bool sample_bilinear_at(const ImageBuffer& src, double x, double y, double* out) {
  if (!(x >= 0.0 && x <= src.width - 1.0 && y >= 0.0 && y <= src.height - 1.0)) return false;
  int x0 = static_cast<int>(std::floor(x));
  int y0 = static_cast<int>(std::floor(y));
  if (x0 > src.width - 2) x0 = src.width - 2;
  if (y0 > src.height - 2) y0 = src.height - 2;
  if (x0 < 0) x0 = 0;  // single-column / single-row images
  if (y0 < 0) y0 = 0;
  const int x1 = (src.width > 1) ? x0 + 1 : x0;
  const int y1 = (src.height > 1) ? y0 + 1 : y0;
  const double fx = x - x0, fy = y - y0;
  for (int c = 0; c < 3; ++c) {
    const double top = (1.0 - fx) * src.at(y0, x0, c) + fx * src.at(y0, x1, c);
    const double bot = (1.0 - fx) * src.at(y1, x0, c) + fx * src.at(y1, x1, c);
    out[c] = (1.0 - fy) * top + fy * bot;
  }
  return true;
}

WarpField warp_coords(const DepthMap& depth, const Pose& pose, const CameraModel& cam_t,
                      const CameraModel& cam_c, int ctx_width, int ctx_height) {
  return warp_coords_impl(depth, pose, cam_t, cam_c, ctx_width, ctx_height, true);
}

WarpField warp_coords_serial(const DepthMap& depth, const Pose& pose, const CameraModel& cam_t,
                             const CameraModel& cam_c, int ctx_width, int ctx_height) {
  return warp_coords_impl(depth, pose, cam_t, cam_c, ctx_width, ctx_height, false);
}

SampledImage sample_bilinear(const ImageBuffer& src, const WarpField& field) {
  return sample_bilinear_impl(src, field, true);
}

SampledImage sample_bilinear_serial(const ImageBuffer& src, const WarpField& field) {
  return sample_bilinear_impl(src, field, false);
}

SampledImage synthesize_view(const ImageBuffer& context, const DepthMap& depth, const Pose& pose,
                             const CameraModel& cam_t, const CameraModel& cam_c) {
  const WarpField field =
      warp_coords(depth, pose, cam_t, cam_c, context.width, context.height);
  return sample_bilinear(context, field);
}

}  // namespace camgeom
