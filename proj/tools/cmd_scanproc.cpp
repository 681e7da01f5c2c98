// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cstdio>

#include "camgeom/scan/crop.hpp"
#include "camgeom/scan/normals.hpp"
#include "common.hpp"

namespace {

using namespace camgeom;
using nlohmann::json;

}  // namespace

int run_scanproc(int argc, char** argv) {
  cli::CommonOpts common;
  std::string color_path, range_path;
  double el_min = -90.0, el_max = 90.0;
  std::vector<std::string> crop_specs;
  CropSpec base;
  bool want_normals = false;
  NormalsConfig nc;
  CLI::App app{"Panorama crops and per-pixel surface normals", "scanproc"};
  cli::add_common(app, common);
  app.add_option("--color", color_path, "panorama color PNG")->required();
  app.add_option("--range", range_path, "panorama range PFM (meters)")->required();
  app.add_option("--el-min", el_min, "lowest covered elevation (degrees)")
      ->capture_default_str();
  app.add_option("--el-max", el_max, "highest covered elevation (degrees)")
      ->capture_default_str();
  app.add_option("--crop", crop_specs, "crop center as \"azimuth,elevation\" in degrees");
  app.add_option("--fov-h", base.fov_h_deg, "crop horizontal FOV (degrees)")
      ->capture_default_str();
  app.add_option("--fov-v", base.fov_v_deg, "crop vertical FOV (degrees)")
      ->capture_default_str();
  app.add_option("--crop-width", base.width)->capture_default_str();
  app.add_option("--crop-height", base.height)->capture_default_str();
  app.add_flag("--normals", want_normals, "estimate per-pixel normals over the scan");
  app.add_option("--window", nc.window, "normal-estimation neighborhood side")
      ->capture_default_str();
  app.add_option("--iterations", nc.iterations, "plane-fit trials per pixel")
      ->capture_default_str();
  if (const int code = cli::parse_args(app, argc, argv); code >= 0) return code;

  try {
    Panorama pano;
    pano.rgb = read_png_rgb(color_path);
    pano.range = read_depth(range_path);
    pano.el_min_deg = el_min;
    pano.el_max_deg = el_max;
    if (pano.range.width != pano.rgb.width || pano.range.height != pano.rgb.height)
      throw std::invalid_argument(range_path + ": shape differs from " + color_path);

    const auto out = cli::prepare_out(common);
    json report;
    report["command"] = "scanproc";
    report["config"] = json{{"color", color_path},
                            {"range", range_path},
                            {"el_min", el_min},
                            {"el_max", el_max},
                            {"crop", crop_specs},
                            {"fov_h", base.fov_h_deg},
                            {"fov_v", base.fov_v_deg},
                            {"crop_width", base.width},
                            {"crop_height", base.height},
                            {"normals", want_normals},
                            {"window", nc.window},
                            {"iterations", nc.iterations},
                            {"seed", common.seed},
                            {"out", common.out}};

    json crops = json::array();
    for (size_t k = 0; k < crop_specs.size(); ++k) {
      CropSpec spec = base;
      if (std::sscanf(crop_specs[k].c_str(), "%lf,%lf", &spec.azimuth_deg,
                      &spec.elevation_deg) != 2)
        throw std::invalid_argument("--crop \"" + crop_specs[k] +
                                    "\": expected \"azimuth,elevation\"");
      const Crop crop = extract_crop(pano, spec);
      char name[64];
      std::snprintf(name, sizeof(name), "crop_%02d.png", static_cast<int>(k));
      write_png_rgb((out / name).string(), crop.image);
      const std::string png_name = name;
      std::snprintf(name, sizeof(name), "crop_%02d_range.pfm", static_cast<int>(k));
      write_depth((out / name).string(), crop.depth);
      const std::string pfm_name = name;
      std::snprintf(name, sizeof(name), "crop_%02d_cam.json", static_cast<int>(k));
      write_camera((out / name).string(), CameraModel(crop.intrinsics));
      crops.push_back(json{{"azimuth", spec.azimuth_deg},
                           {"elevation", spec.elevation_deg},
                           {"image", png_name},
                           {"range", pfm_name},
                           {"camera", name},
                           {"valid_fraction",
                            crop.depth.width > 0
                                ? [&crop] {
                                    size_t n = 0;
                                    for (uint8_t v : crop.depth.valid) n += v != 0;
                                    return static_cast<double>(n) / crop.depth.valid.size();
                                  }()
                                : 0.0}});
    }
    report["crops"] = crops;

    if (want_normals) {
      nc.seed = common.seed;
      const PointGrid grid = pano_to_points(pano);
      const NormalGrid normals = estimate_normals(grid, nc);
      ImageBuffer packed(normals.width, normals.height);
      for (int y = 0; y < normals.height; ++y)
        for (int x = 0; x < normals.width; ++x)
          for (int c = 0; c < 3; ++c)
            packed.at(y, x, c) = normals.normals[normals.idx(y, x)](c);
      write_pfm_rgb((out / "normals.pfm").string(), packed);
      report["normals_file"] = "normals.pfm";
    }

    cli::write_report(out, "scanproc.json", report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitValidation;
  }
  return cli::kExitOk;
}
