// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>

#include "camgeom/rig/pointcloud.hpp"

namespace camgeom {

// Binary little-endian PLY with one vertex element:
//   property float x, y, z
//   property uchar red, green, blue
// Colors in [0, 1] are quantized by rounding on write and divided by 255 on
// read. read_ply accepts only files written in this exact layout.

void write_ply(const std::string& path, const PointCloud& cloud);
PointCloud read_ply(const std::string& path);

}  // namespace camgeom
