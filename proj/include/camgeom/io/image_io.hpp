// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>

#include "camgeom/photo/image.hpp"

namespace camgeom {

// ---- color images ----------------------------------------------------------

// 8-bit RGB PNG. Values are linearized to [0, 1] by /255 on read; on write
// they are clamped to [0, 1] and quantized with rounding. Grayscale and
// palette files are expanded to RGB; an alpha channel is dropped.
ImageBuffer read_png_rgb(const std::string& path);
void write_png_rgb(const std::string& path, const ImageBuffer& image);

// ---- PFM (float32) ---------------------------------------------------------

// Portable FloatMap: "Pf" one channel, "PF" three channels. The sign of the
// scale field encodes byte order (negative = little-endian); rows are stored
// bottom-to-top as the format prescribes. Written files always use scale -1.
ScalarMap read_pfm(const std::string& path);
void write_pfm(const std::string& path, const ScalarMap& map);
ImageBuffer read_pfm_rgb(const std::string& path);
void write_pfm_rgb(const std::string& path, const ImageBuffer& image);

// ---- depth maps ------------------------------------------------------------

// Format dispatch by extension (case-insensitive):
//   .pfm  float32 meters; entries <= 0 or non-finite are invalid
//   .png  16-bit grayscale millimeters; 0 codes "no depth"
// Any other extension raises std::invalid_argument.
DepthMap read_depth(const std::string& path);
void write_depth(const std::string& path, const DepthMap& depth);

// 16-bit millimeter PNG depth (the .png branch of the dispatch above).
// Writing clamps to the representable range [1, 65535] mm for valid pixels.
DepthMap read_png_depth16(const std::string& path);
void write_png_depth16(const std::string& path, const DepthMap& depth);

}  // namespace camgeom
