// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT
//
// Timings of the OpenMP kernels against their single-threaded reference
// twins. Each pair is verified to produce identical results before timing.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>

#include "camgeom/calib/rectify.hpp"
#include "camgeom/photo/losses.hpp"
#include "camgeom/photo/warp.hpp"
#include "camgeom/rays/ray_surface.hpp"
#include "camgeom/scan/normals.hpp"
#include "camgeom/synth/scene.hpp"

namespace {

using namespace camgeom;
using Clock = std::chrono::steady_clock;

double time_best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", omp_get_max_threads());
  const int W = 960, H = 720;

  const UcmParams ucm{420.0, 420.0, 0.5 * (W - 1), 0.5 * (H - 1), 0.62};
  const CameraModel cam(ucm);
  const PinholeParams pin{420.0, 420.0, 0.5 * (W - 1), 0.5 * (H - 1)};
  const Pose pose = look_at_pose(Point3(0.1, -0.05, 0.0), Point3(0.0, 0.0, 5.0));
  const RenderedView view = render_plane(cam, Pose::Identity(), W, H);
  const RenderedView view2 = render_plane(cam, pose, W, H);

  {
    WarpField a, b;
    const double ts = time_best_of(3, [&] { a = warp_coords_serial(view.depth, pose, cam, cam); });
    const double tp = time_best_of(3, [&] { b = warp_coords(view.depth, pose, cam, cam); });
    report("warp_coords", ts, tp, a.u == b.u && a.v == b.v && a.valid == b.valid);
  }
  {
    const WarpField field = warp_coords(view.depth, pose, cam, cam);
    SampledImage a, b;
    const double ts =
        time_best_of(3, [&] { a = sample_bilinear_serial(view2.image, field); });
    const double tp = time_best_of(3, [&] { b = sample_bilinear(view2.image, field); });
    report("sample_bilinear", ts, tp,
           a.image.data == b.image.data && a.mask.on == b.mask.on);
  }
  {
    ScalarMap a, b;
    const double ts = time_best_of(3, [&] { a = ssim_serial(view.image, view2.image); });
    const double tp = time_best_of(3, [&] { b = ssim(view.image, view2.image); });
    report("ssim", ts, tp, a.value == b.value);
  }
  {
    RectifyResult a, b;
    const double ts = time_best_of(3, [&] { a = rectify_serial(view.image, cam, pin); });
    const double tp = time_best_of(3, [&] { b = rectify(view.image, cam, pin); });
    report("rectify", ts, tp, a.image.data == b.image.data && a.mask.on == b.mask.on);
  }
  {
    const RaySurface surface = template_from_pinhole(pin, 240, 320);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<Point3> queries(20000);
    for (auto& q : queries)
      q = Point3(2.0 * uni(rng), 2.0 * uni(rng), 3.0 + uni(rng));
    std::vector<Pixel> a, b;
    const double ts = time_best_of(3, [&] { a = project_argmax_batch_serial(surface, queries); });
    const double tp = time_best_of(3, [&] { b = project_argmax_batch(surface, queries); });
    bool same = a.size() == b.size();
    for (size_t i = 0; same && i < a.size(); ++i) same = a[i] == b[i];
    report("project_argmax_batch", ts, tp, same);
  }
  {
    const Panorama pano = synthetic_plane_panorama(512, 256, 1.5);
    const PointGrid grid = pano_to_points(pano);
    NormalsConfig cfg;
    cfg.iterations = 40;
    NormalGrid a, b;
    const double ts = time_best_of(2, [&] { a = estimate_normals_serial(grid, cfg); });
    const double tp = time_best_of(2, [&] { b = estimate_normals(grid, cfg); });
    bool same = a.normals.size() == b.normals.size();
    for (size_t i = 0; same && i < a.normals.size(); ++i) same = a.normals[i] == b.normals[i];
    report("estimate_normals", ts, tp, same);
  }
  return 0;
}
