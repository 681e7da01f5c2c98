// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <vector>

#include "camgeom/photo/image.hpp"
#include "camgeom/photo/losses.hpp"

namespace camgeom {

enum class ScalingMode { None, Median, Shared };

struct MetricsReport {
  double abs_rel = 0.0;
  double sq_rel = 0.0;
  double rmse = 0.0;
  double rmse_log = 0.0;     // natural log
  double mae_log10 = 0.0;
  double rmse_log10 = 0.0;
  double delta1 = 0.0;  // fraction with max(pred/gt, gt/pred) < 1.25
  double delta2 = 0.0;  // ... < 1.25^2
  double delta3 = 0.0;  // ... < 1.25^3
  int valid_count = 0;
  ScalingMode scaling_mode = ScalingMode::None;
  double scale = 1.0;  // factor applied to predictions before comparison
};

// Depth metrics over pixels valid in both maps with gt in (0, d_max].
// Median mode multiplies predictions by med(gt)/med(pred) computed over
// those pixels; Shared mode multiplies by the caller-provided gamma.
// Throws when no pixel qualifies.
MetricsReport evaluate(const DepthMap& pred, const DepthMap& gt, ScalingMode mode,
                       double d_max = kDepthMax, double gamma = 1.0);

struct RigMetrics {
  std::vector<MetricsReport> per_camera;
  MetricsReport average;  // plain mean of each metric; valid_count summed
};

// Per-camera evaluation. `shared` scales every camera by one
// shared_median_scale gamma; otherwise each camera is median-scaled on its
// own frame.
RigMetrics evaluate_rig(const std::vector<DepthMap>& preds, const std::vector<DepthMap>& gts,
                        bool shared, double d_max = kDepthMax);

}  // namespace camgeom
