// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include "camgeom/camera/models.hpp"
#include "camgeom/photo/image.hpp"

namespace camgeom {

struct RectifyResult {
  ImageBuffer image;  // zeros where unmapped
  MaskImage mask;     // 1 where the remap landed inside the source image
};

// Resamples `image` (taken through `src`) as seen through the ideal pinhole
// `dst`: each destination pixel is unprojected through dst at unit depth,
// projected through src, and bilinearly sampled. Pixels whose remap falls
// outside the source projection domain or image bounds come back as 0 with
// mask 0. Output size defaults to the input size.
RectifyResult rectify(const ImageBuffer& image, const CameraModel& src,
                      const PinholeParams& dst, int out_width = -1, int out_height = -1);

// Single-threaded reference; bitwise-identical to rectify().
RectifyResult rectify_serial(const ImageBuffer& image, const CameraModel& src,
                             const PinholeParams& dst, int out_width = -1,
                             int out_height = -1);

}  // namespace camgeom
