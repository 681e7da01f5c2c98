// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

namespace camgeom {

// Row-parallel pixel loop. Every heavy kernel has a parallel entry point and
// a *_serial twin that runs the identical per-pixel body through this helper,
// so the two are bitwise comparable (pixels are independent; no cross-pixel
// reductions happen inside the body). bench/ times the pairs.
template <class Body>
void for_each_pixel(int height, int width, bool parallel, Body&& body) {
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) body(y, x);
  } else {
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) body(y, x);
  }
}

// Same idea for flat index ranges (point clouds, query batches).
template <class Body>
void for_each_index(long n, bool parallel, Body&& body) {
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) body(i);
  } else {
    for (long i = 0; i < n; ++i) body(i);
  }
}

}  // namespace camgeom
