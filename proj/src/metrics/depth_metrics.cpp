// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <stdexcept>

#include "camgeom/core/stats.hpp"
#include "camgeom/metrics/depth_metrics.hpp"
#include "camgeom/rig/pointcloud.hpp"

namespace camgeom {

MetricsReport evaluate(const DepthMap& pred, const DepthMap& gt, ScalingMode mode, double d_max,
                       double gamma) {
  if (pred.width != gt.width || pred.height != gt.height) {
    throw std::invalid_argument("evaluate: shape mismatch");
  }

  std::vector<size_t> sel;
  for (size_t i = 0; i < gt.depth.size(); ++i) {
    if (gt.valid[i] && gt.depth[i] > 0.0 && gt.depth[i] <= d_max && pred.valid[i]) {
      sel.push_back(i);
    }
  }
  if (sel.empty()) throw std::invalid_argument("evaluate: no valid pixels");

  double scale = 1.0;
  if (mode == ScalingMode::Median) {
    std::vector<double> pv, gv;
    pv.reserve(sel.size());
    gv.reserve(sel.size());
    for (size_t i : sel) {
      pv.push_back(pred.depth[i]);
      gv.push_back(gt.depth[i]);
    }
    const double mp = median_midpoint(pv);
    if (!(mp > 0.0)) throw std::invalid_argument("evaluate: non-positive prediction median");
    scale = median_midpoint(gv) / mp;
  } else if (mode == ScalingMode::Shared) {
    scale = gamma;
  }

  MetricsReport r;
  r.scaling_mode = mode;
  r.scale = scale;
  r.valid_count = static_cast<int>(sel.size());
  const double n = static_cast<double>(sel.size());
  const double thr1 = 1.25, thr2 = 1.25 * 1.25, thr3 = 1.25 * 1.25 * 1.25;
  double s_abs = 0.0, s_sq = 0.0, s_rm = 0.0, s_rl = 0.0, s_m10 = 0.0, s_r10 = 0.0;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  for (size_t i : sel) {
    const double d = scale * pred.depth[i];
    const double g = gt.depth[i];
    if (!(d > 0.0)) throw std::domain_error("evaluate: non-positive scaled prediction");
    const double diff = d - g;
    s_abs += std::abs(diff) / g;
    s_sq += diff * diff / g;
    s_rm += diff * diff;
    const double dl = std::log(d) - std::log(g);
    s_rl += dl * dl;
    const double dl10 = std::log10(d) - std::log10(g);
    s_m10 += std::abs(dl10);
    s_r10 += dl10 * dl10;
    const double ratio = std::max(d / g, g / d);
    c1 += ratio < thr1;
    c2 += ratio < thr2;
    c3 += ratio < thr3;
  }
  r.abs_rel = s_abs / n;
  r.sq_rel = s_sq / n;
  r.rmse = std::sqrt(s_rm / n);
  r.rmse_log = std::sqrt(s_rl / n);
  r.mae_log10 = s_m10 / n;
  r.rmse_log10 = std::sqrt(s_r10 / n);
  r.delta1 = c1 / n;
  r.delta2 = c2 / n;
  r.delta3 = c3 / n;
  return r;
}

RigMetrics evaluate_rig(const std::vector<DepthMap>& preds, const std::vector<DepthMap>& gts,
                        bool shared, double d_max) {
  if (preds.size() != gts.size() || preds.empty()) {
    throw std::invalid_argument("evaluate_rig: list size mismatch or empty");
  }
  RigMetrics out;
  double gamma = 1.0;
  if (shared) gamma = shared_median_scale(preds, gts);
  for (size_t c = 0; c < preds.size(); ++c) {
    out.per_camera.push_back(shared
                                 ? evaluate(preds[c], gts[c], ScalingMode::Shared, d_max, gamma)
                                 : evaluate(preds[c], gts[c], ScalingMode::Median, d_max));
  }

  MetricsReport& avg = out.average;
  const double nc = static_cast<double>(out.per_camera.size());
  for (const auto& m : out.per_camera) {
    avg.abs_rel += m.abs_rel / nc;
    avg.sq_rel += m.sq_rel / nc;
    avg.rmse += m.rmse / nc;
    avg.rmse_log += m.rmse_log / nc;
    avg.mae_log10 += m.mae_log10 / nc;
    avg.rmse_log10 += m.rmse_log10 / nc;
    avg.delta1 += m.delta1 / nc;
    avg.delta2 += m.delta2 / nc;
    avg.delta3 += m.delta3 / nc;
    avg.valid_count += m.valid_count;
  }
  avg.scaling_mode = shared ? ScalingMode::Shared : ScalingMode::Median;
  avg.scale = shared ? gamma : 1.0;
  return out;
}

}  // namespace camgeom
