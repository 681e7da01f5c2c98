// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <stdexcept>

#include "camgeom/rig/consistency.hpp"

namespace camgeom {

Pose to_canonical(const Pose& pred_i, const Rig& rig, int i, int j) {
  rig.require_index(i, "to_canonical");
  rig.require_index(j, "to_canonical");
  const Pose& Xi = rig.cameras[i].extrinsic;
  const Pose& Xj = rig.cameras[j].extrinsic;
  return Xj.inverse() * Xi * pred_i * Xi.inverse() * Xj;
}

PoseConsistency pose_consistency_losses(const std::vector<Pose>& preds, const Rig& rig,
                                        double alpha_t, double alpha_r) {
  if (preds.size() != static_cast<size_t>(rig.size())) {
    throw std::invalid_argument("pose_consistency_losses: prediction count != camera count");
  }
  if (preds.size() < 2) {
    throw std::invalid_argument("pose_consistency_losses: need at least 2 cameras");
  }

  PoseConsistency out;
  const Eigen::Vector3d e0 = euler_xyz_from_rotation(preds[0].R);
  for (int j = 1; j < rig.size(); ++j) {
    const Pose conv = to_canonical(preds[j], rig, j, 0);
    out.t_loss += (preds[0].t - conv.t).squaredNorm();
    const Eigen::Vector3d ej = euler_xyz_from_rotation(conv.R);
    Eigen::Vector3d de;
    for (int k = 0; k < 3; ++k) de(k) = wrap_angle(e0(k) - ej(k));
    out.r_loss += de.squaredNorm();
  }
  out.combined = alpha_t * out.t_loss + alpha_r * out.r_loss;
  return out;
}

}  // namespace camgeom
