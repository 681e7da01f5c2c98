// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <stdexcept>

#include "camgeom/embed/losses.hpp"

namespace camgeom {

double depth_log_l1(const DepthMap& pred, const DepthMap& gt) {
  if (pred.width != gt.width || pred.height != gt.height) {
    throw std::invalid_argument("depth_log_l1: shape mismatch");
  }
  double sum = 0.0;
  int count = 0;
  for (size_t i = 0; i < pred.depth.size(); ++i) {
    if (!pred.valid[i] || !gt.valid[i]) continue;
    if (!(pred.depth[i] > 0.0) || !(gt.depth[i] > 0.0)) {
      throw std::domain_error("depth_log_l1: non-positive depth under log");
    }
    sum += std::abs(std::log(pred.depth[i]) - std::log(gt.depth[i]));
    ++count;
  }
  if (count == 0) throw std::invalid_argument("depth_log_l1: no jointly valid pixels");
  return sum / count;
}

double rgb_squared_error(const ImageBuffer& pred, const ImageBuffer& gt, const MaskImage* mask) {
  require_same_shape(pred, gt, "rgb_squared_error");
  double sum = 0.0;
  int count = 0;
  for (int y = 0; y < pred.height; ++y) {
    for (int x = 0; x < pred.width; ++x) {
      if (mask && !mask->at(y, x)) continue;
      double e = 0.0;
      for (int c = 0; c < 3; ++c) {
        const double d = pred.at(y, x, c) - gt.at(y, x, c);
        e += d * d;
      }
      sum += e;
      ++count;
    }
  }
  return count > 0 ? sum / count : 0.0;
}

double supervision_losses(double l_d, double l_s, double l_dv, double l_sv, double lambda_s,
                          double lambda_v) {
  return l_d + lambda_s * l_s + lambda_v * (l_dv + lambda_s * l_sv);
}

double supervision_total(const DepthMap& pred_depth, const DepthMap& gt_depth,
                         const ImageBuffer& pred_rgb, const ImageBuffer& gt_rgb,
                         const DepthMap* vpred_depth, const DepthMap* vgt_depth,
                         const ImageBuffer* vpred_rgb, const ImageBuffer* vgt_rgb,
                         double lambda_s, double lambda_v) {
  const double l_d = depth_log_l1(pred_depth, gt_depth);
  const double l_s = rgb_squared_error(pred_rgb, gt_rgb);
  double l_dv = 0.0, l_sv = 0.0;
  if (vpred_depth && vgt_depth) l_dv = depth_log_l1(*vpred_depth, *vgt_depth);
  if (vpred_rgb && vgt_rgb && vgt_depth) {
    MaskImage vm(vgt_depth->width, vgt_depth->height, false);
    for (int y = 0; y < vm.height; ++y) {
      for (int x = 0; x < vm.width; ++x) vm.set(y, x, vgt_depth->is_valid(y, x));
    }
    l_sv = rgb_squared_error(*vpred_rgb, *vgt_rgb, &vm);
  }
  return supervision_losses(l_d, l_s, l_dv, l_sv, lambda_s, lambda_v);
}

}  // namespace camgeom
