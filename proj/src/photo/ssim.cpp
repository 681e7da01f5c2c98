// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <algorithm>
#include <cmath>

#include "camgeom/parallel.hpp"
#include "camgeom/photo/losses.hpp"

namespace camgeom {

namespace {

constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

// Reflect (mirror-without-repeat) index into [0, n).
inline int reflect(int i, int n) {
  if (n == 1) return 0;
  if (i < 0) i = -i;
  if (i >= n) i = 2 * n - 2 - i;
  return i;
}

ScalarMap ssim_impl(const ImageBuffer& a, const ImageBuffer& b, bool parallel) {
  require_same_shape(a, b, "ssim");
  const int W = a.width, H = a.height;
  ScalarMap out(W, H);
  for_each_pixel(H, W, parallel, [&](int y, int x) {
    double acc = 0.0;
    for (int c = 0; c < 3; ++c) {
      double sa = 0.0, sb = 0.0, saa = 0.0, sbb = 0.0, sab = 0.0;
      for (int dy = -1; dy <= 1; ++dy) {
        const int yy = reflect(y + dy, H);
        for (int dx = -1; dx <= 1; ++dx) {
          const int xx = reflect(x + dx, W);
          const double va = a.at(yy, xx, c), vb = b.at(yy, xx, c);
          sa += va;
          sb += vb;
          saa += va * va;
          sbb += vb * vb;
          sab += va * vb;
        }
      }
      const double n = 9.0;
      const double mu_a = sa / n, mu_b = sb / n;
      // E[x^2] - E[x]^2 can round to a tiny negative; clamp so the SSIM
      // bound |s| <= 1 survives floating point.
      const double var_a = std::max(saa / n - mu_a * mu_a, 0.0);
      const double var_b = std::max(sbb / n - mu_b * mu_b, 0.0);
      const double cov = sab / n - mu_a * mu_b;
      const double num = (2.0 * mu_a * mu_b + kC1) * (2.0 * cov + kC2);
      const double den = (mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2);
      acc += std::clamp(num / den, -1.0, 1.0);
    }
    out.at(y, x) = acc / 3.0;
  });
  return out;
}

}  // namespace

ScalarMap ssim(const ImageBuffer& a, const ImageBuffer& b) { return ssim_impl(a, b, true); }

ScalarMap ssim_serial(const ImageBuffer& a, const ImageBuffer& b) {
  return ssim_impl(a, b, false);
}

}  // namespace camgeom
