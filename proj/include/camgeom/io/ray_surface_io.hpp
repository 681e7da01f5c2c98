// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>

#include "camgeom/rays/ray_surface.hpp"

namespace camgeom {

// Binary grid layout, all numeric fields little-endian:
//   8-byte magic "RAYSURF\0"
//   uint32 height, uint32 width
//   height*width*3 float64 direction components, row-major, xyz interleaved
//   3 float64 origin components
// Directions are renormalized on read to absorb representation error.

void write_ray_surface(const std::string& path, const RaySurface& surface);
RaySurface read_ray_surface(const std::string& path);

}  // namespace camgeom
