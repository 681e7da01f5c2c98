// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/calib/rectify.hpp"

#include "camgeom/parallel.hpp"
#include "camgeom/photo/warp.hpp"

namespace camgeom {

namespace {

RectifyResult rectify_impl(const ImageBuffer& image, const CameraModel& src,
                           const PinholeParams& dst, int out_width, int out_height,
                           bool parallel) {
  validate(src);
  validate(CameraModel(dst));
  const int W = out_width > 0 ? out_width : image.width;
  const int H = out_height > 0 ? out_height : image.height;
  const CameraModel dst_model(dst);

  RectifyResult out;
  out.image = ImageBuffer(W, H, 0.0);
  out.mask = MaskImage(W, H, false);
  for_each_pixel(H, W, parallel, [&](int y, int x) {
    const auto P = try_unproject(dst_model, Pixel(x, y), 1.0);
    if (!P) return;
    const auto p = try_project(src, *P);
    if (!p) return;
    double rgb[3];
    if (!sample_bilinear_at(image, p->x(), p->y(), rgb)) return;
    for (int c = 0; c < 3; ++c) out.image.at(y, x, c) = rgb[c];
    out.mask.set(y, x, true);
  });
  return out;
}

}  // namespace

RectifyResult rectify(const ImageBuffer& image, const CameraModel& src, const PinholeParams& dst,
                      int out_width, int out_height) {
  return rectify_impl(image, src, dst, out_width, out_height, true);
}

RectifyResult rectify_serial(const ImageBuffer& image, const CameraModel& src,
                             const PinholeParams& dst, int out_width, int out_height) {
  return rectify_impl(image, src, dst, out_width, out_height, false);
}

}  // namespace camgeom
