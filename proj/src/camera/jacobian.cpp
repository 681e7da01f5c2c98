// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <stdexcept>

#include "camgeom/camera/models.hpp"

namespace camgeom {

Eigen::Matrix<double, 2, Eigen::Dynamic> param_jacobian(const CameraModel& model,
                                                        const Point3& P) {
  const Eigen::VectorXd theta = get_params(model);
  const int n = static_cast<int>(theta.size());
  Eigen::Matrix<double, 2, Eigen::Dynamic> J(2, n);
  for (int k = 0; k < n; ++k) {
    const double h = std::max(1e-6, 1e-6 * std::abs(theta(k)));
    Eigen::VectorXd hi = theta, lo = theta;
    hi(k) += h;
    lo(k) -= h;
    const auto p_hi = try_project(with_params(model, hi), P);
    const auto p_lo = try_project(with_params(model, lo), P);
    if (!p_hi || !p_lo)
      throw std::domain_error("param_jacobian: projection domain violated at perturbed " +
                              param_names(model)[k]);
    J.col(k) = (*p_hi - *p_lo) / (2.0 * h);
  }
  return J;
}

}  // namespace camgeom
