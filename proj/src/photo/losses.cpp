// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <stdexcept>

#include "camgeom/photo/losses.hpp"

namespace camgeom {

ScalarMap photometric_loss(const ImageBuffer& target, const ImageBuffer& synthesized,
                           double alpha) {
  require_same_shape(target, synthesized, "photometric_loss");
  const ScalarMap s = ssim(target, synthesized);
  ScalarMap out(target.width, target.height);
  for (int y = 0; y < target.height; ++y) {
    for (int x = 0; x < target.width; ++x) {
      double l1 = 0.0;
      for (int c = 0; c < 3; ++c) l1 += std::abs(target.at(y, x, c) - synthesized.at(y, x, c));
      l1 /= 3.0;
      out.at(y, x) = alpha * (1.0 - s.at(y, x)) / 2.0 + (1.0 - alpha) * l1;
    }
  }
  return out;
}

MinReprojection min_reprojection(const std::vector<ScalarMap>& warped_losses,
                                 const std::vector<ScalarMap>& original_losses) {
  if (warped_losses.empty()) throw std::invalid_argument("min_reprojection: no context losses");
  if (original_losses.size() != warped_losses.size()) {
    throw std::invalid_argument("min_reprojection: warped/original context count mismatch");
  }
  const int W = warped_losses[0].width, H = warped_losses[0].height;
  for (const auto& m : warped_losses) {
    if (m.width != W || m.height != H)
      throw std::invalid_argument("min_reprojection: shape mismatch");
  }
  for (const auto& m : original_losses) {
    if (m.width != W || m.height != H)
      throw std::invalid_argument("min_reprojection: shape mismatch");
  }

  MinReprojection out;
  out.loss = ScalarMap(W, H);
  out.automask = MaskImage(W, H, false);
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      double mw = warped_losses[0].at(y, x);
      for (size_t k = 1; k < warped_losses.size(); ++k)
        mw = std::min(mw, warped_losses[k].at(y, x));
      double mo = original_losses[0].at(y, x);
      for (size_t k = 1; k < original_losses.size(); ++k)
        mo = std::min(mo, original_losses[k].at(y, x));
      out.loss.at(y, x) = mw;
      // Static-pixel rule: keep only pixels whose synthesized appearance
      // beats the unwarped context.
      out.automask.set(y, x, mw < mo);
    }
  }
  return out;
}

double smoothness(const DepthMap& depth, const ImageBuffer& image) {
  if (depth.width != image.width || depth.height != image.height) {
    throw std::invalid_argument("smoothness: depth/image shape mismatch");
  }
  const int W = depth.width, H = depth.height;
  double sum = 0.0;
  int count = 0;
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      if (!depth.is_valid(y, x)) continue;
      double term = 0.0;
      bool any = false;
      if (x + 1 < W && depth.is_valid(y, x + 1)) {
        double gi = 0.0;
        for (int c = 0; c < 3; ++c) gi += std::abs(image.at(y, x + 1, c) - image.at(y, x, c));
        gi /= 3.0;
        term += std::abs(depth.at(y, x + 1) - depth.at(y, x)) * std::exp(-gi);
        any = true;
      }
      if (y + 1 < H && depth.is_valid(y + 1, x)) {
        double gi = 0.0;
        for (int c = 0; c < 3; ++c) gi += std::abs(image.at(y + 1, x, c) - image.at(y, x, c));
        gi /= 3.0;
        term += std::abs(depth.at(y + 1, x) - depth.at(y, x)) * std::exp(-gi);
        any = true;
      }
      if (any) {
        sum += term;
        ++count;
      }
    }
  }
  return count > 0 ? sum / count : 0.0;
}

double total_loss(const ScalarMap& photometric, const MaskImage* mask, double smooth,
                  double lambda_d) {
  double sum = 0.0;
  int count = 0;
  for (int y = 0; y < photometric.height; ++y) {
    for (int x = 0; x < photometric.width; ++x) {
      if (mask && !mask->at(y, x)) continue;
      sum += photometric.at(y, x);
      ++count;
    }
  }
  const double mean = count > 0 ? sum / count : 0.0;
  return mean + lambda_d * smooth;
}

}  // namespace camgeom
