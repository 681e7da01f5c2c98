// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>
#include <vector>

#include "camgeom/embed/camera_rays.hpp"

namespace camgeom {

// Dense float32 tensor file: one ASCII header line "H W C\n" followed by
// H*W*C little-endian float32 values, row-major with channels fastest.
struct Tensor3 {
  int height = 0, width = 0, channels = 0;
  std::vector<float> data;  // size height * width * channels

  size_t idx(int y, int x, int c) const {
    return (static_cast<size_t>(y) * width + x) * channels + c;
  }
};

void write_tensor(const std::string& path, const Tensor3& tensor);
Tensor3 read_tensor(const std::string& path);

// Embedding export; doubles narrow to float32.
Tensor3 tensor_from_embedding(const CameraEmbedding& embedding);

}  // namespace camgeom
