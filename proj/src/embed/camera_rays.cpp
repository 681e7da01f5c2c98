// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <Eigen/Dense>
#include <stdexcept>

#include "camgeom/embed/camera_rays.hpp"

namespace camgeom {

RayGrid camera_rays(const PinholeParams& K, const Pose& T, int H, int W,
                    bool include_translation) {
  validate(CameraModel(K));
  if (W <= 0 || H <= 0) throw std::invalid_argument("camera_rays: empty grid");
  Eigen::Matrix3d Km = Eigen::Matrix3d::Identity();
  Km(0, 0) = K.fx;
  Km(1, 1) = K.fy;
  Km(0, 2) = K.cx;
  Km(1, 2) = K.cy;
  const Eigen::Matrix3d KR = Km * T.R;
  Eigen::FullPivLU<Eigen::Matrix3d> lu(KR);
  if (!lu.isInvertible()) throw std::invalid_argument("camera_rays: singular K*R");
  const Eigen::Matrix3d KRinv = lu.inverse();

  RayGrid grid;
  grid.width = W;
  grid.height = H;
  grid.origin = -(T.R * T.t);
  grid.directions.resize(static_cast<size_t>(W) * H);
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      Point3 r = KRinv * Eigen::Vector3d(x, y, 1.0);
      if (include_translation) r += T.t;
      grid.directions[grid.idx(y, x)] = r;
    }
  }
  return grid;
}

CameraEmbedding camera_embedding(const RayGrid& rays, const FourierConfig& cfg) {
  CameraEmbedding emb;
  emb.width = rays.width;
  emb.height = rays.height;
  emb.channels = fourier_size(3, cfg.K_o) + fourier_size(3, cfg.K_r);
  emb.data.resize(static_cast<size_t>(emb.width) * emb.height * emb.channels);

  const Eigen::VectorXd eo = fourier_encode(rays.origin, cfg.K_o, cfg.mu);
  const int no = static_cast<int>(eo.size());
  for (int y = 0; y < emb.height; ++y) {
    for (int x = 0; x < emb.width; ++x) {
      const Eigen::VectorXd er =
          fourier_encode(rays.directions[rays.idx(y, x)], cfg.K_r, cfg.mu);
      for (int c = 0; c < no; ++c) emb.data[emb.idx(y, x, c)] = eo(c);
      for (int c = 0; c < er.size(); ++c) emb.data[emb.idx(y, x, no + c)] = er(c);
    }
  }
  return emb;
}

}  // namespace camgeom
