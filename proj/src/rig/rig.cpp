// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <stdexcept>
#include <string>

#include "camgeom/rig/rig.hpp"

namespace camgeom {

void Rig::require_index(int i, const char* where) const {
  if (i < 0 || i >= size()) {
    throw std::out_of_range(std::string(where) + ": camera index " + std::to_string(i) +
                            " out of range [0, " + std::to_string(size()) + ")");
  }
}

Pose Rig::relative_extrinsic(int i, int j) const {
  require_index(i, "relative_extrinsic");
  require_index(j, "relative_extrinsic");
  return cameras[j].extrinsic.inverse() * cameras[i].extrinsic;
}

void Rig::canonicalize() {
  require_index(canonical_index, "canonicalize");
  const Pose inv = cameras[canonical_index].extrinsic.inverse();
  for (auto& cam : cameras) cam.extrinsic = inv * cam.extrinsic;
}

}  // namespace camgeom
