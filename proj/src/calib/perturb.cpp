// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <stdexcept>

#include "camgeom/calib/calibrate.hpp"

namespace camgeom {

PerturbationReport perturb_and_recover(const CameraModel& model_true,
                                       const CorrespondenceSet& corrs, double factor,
                                       const OptimizerConfig& cfg) {
  if (!(factor > 0.0)) throw std::invalid_argument("perturb_and_recover: factor must be > 0");
  validate(model_true);

  PerturbationReport report;
  report.factor = factor;
  report.truth = get_params(model_true);

  const CameraModel perturbed = with_params(model_true, factor * report.truth);
  validate(perturbed);  // e.g. alpha scaled out of range makes the run meaningless

  report.result = refine(perturbed, corrs, cfg);
  report.recovered = get_params(report.result.model);

  report.relative_error.resize(report.truth.size());
  for (int i = 0; i < report.truth.size(); ++i) {
    const double denom = std::abs(report.truth(i));
    // Absolute error for parameters whose reference value is zero.
    report.relative_error(i) =
        std::abs(report.recovered(i) - report.truth(i)) / (denom > 1e-12 ? denom : 1.0);
  }
  return report;
}

}  // namespace camgeom
