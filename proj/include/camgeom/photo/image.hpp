// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace camgeom {

// H x W x 3 color image, values in [0, 1], row-major interleaved.
struct ImageBuffer {
  int width = 0, height = 0;
  std::vector<double> data;  // size width * height * 3

  ImageBuffer() = default;
  ImageBuffer(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<size_t>(w) * h * 3, fill) {}

  double& at(int y, int x, int c) { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  double at(int y, int x, int c) const {
    return data[(static_cast<size_t>(y) * width + x) * 3 + c];
  }
  bool same_shape(const ImageBuffer& o) const {
    return width == o.width && height == o.height;
  }
};

// H x W scalar depth with validity mask. Valid entries are finite and > 0;
// 0 is the on-disk code for "no depth".
struct DepthMap {
  int width = 0, height = 0;
  std::vector<double> depth;
  std::vector<uint8_t> valid;

  DepthMap() = default;
  DepthMap(int w, int h, double fill = 0.0, bool valid_fill = false)
      : width(w), height(h), depth(static_cast<size_t>(w) * h, fill),
        valid(static_cast<size_t>(w) * h, valid_fill ? 1 : 0) {}

  size_t idx(int y, int x) const { return static_cast<size_t>(y) * width + x; }
  double& at(int y, int x) { return depth[idx(y, x)]; }
  double at(int y, int x) const { return depth[idx(y, x)]; }
  bool is_valid(int y, int x) const { return valid[idx(y, x)] != 0; }
  void set(int y, int x, double d) {
    depth[idx(y, x)] = d;
    valid[idx(y, x)] = d > 0.0 ? 1 : 0;
  }
};

// Boolean H x W mask.
struct MaskImage {
  int width = 0, height = 0;
  std::vector<uint8_t> on;

  MaskImage() = default;
  MaskImage(int w, int h, bool fill = false)
      : width(w), height(h), on(static_cast<size_t>(w) * h, fill ? 1 : 0) {}

  size_t idx(int y, int x) const { return static_cast<size_t>(y) * width + x; }
  bool at(int y, int x) const { return on[idx(y, x)] != 0; }
  void set(int y, int x, bool v) { on[idx(y, x)] = v ? 1 : 0; }
  double fraction_on() const {
    if (on.empty()) return 0.0;
    size_t k = 0;
    for (uint8_t v : on) k += v != 0;
    return static_cast<double>(k) / static_cast<double>(on.size());
  }
};

// Per-pixel scalar map (losses, SSIM, smoothness terms).
struct ScalarMap {
  int width = 0, height = 0;
  std::vector<double> value;

  ScalarMap() = default;
  ScalarMap(int w, int h, double fill = 0.0)
      : width(w), height(h), value(static_cast<size_t>(w) * h, fill) {}

  size_t idx(int y, int x) const { return static_cast<size_t>(y) * width + x; }
  double& at(int y, int x) { return value[idx(y, x)]; }
  double at(int y, int x) const { return value[idx(y, x)]; }
};

// Continuous source coordinates per destination pixel with an in-bounds /
// projectable flag. flag false => (u, v) must not be sampled.
struct WarpField {
  int width = 0, height = 0;
  std::vector<double> u, v;
  std::vector<uint8_t> valid;

  WarpField() = default;
  WarpField(int w, int h)
      : width(w), height(h), u(static_cast<size_t>(w) * h, 0.0),
        v(static_cast<size_t>(w) * h, 0.0), valid(static_cast<size_t>(w) * h, 0) {}

  size_t idx(int y, int x) const { return static_cast<size_t>(y) * width + x; }
};

inline void require_same_shape(const ImageBuffer& a, const ImageBuffer& b, const char* where) {
  if (!a.same_shape(b)) throw std::invalid_argument(std::string(where) + ": shape mismatch");
}

// Clamps every channel value into [0, 1] in place.
void clamp_unit(ImageBuffer& image);

// Mean absolute per-channel difference over two same-shape images.
double mean_abs_diff(const ImageBuffer& a, const ImageBuffer& b);

}  // namespace camgeom
