// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/calib/rectify.hpp"
#include "common.hpp"

namespace {

using namespace camgeom;
using nlohmann::json;

}  // namespace

int run_rectify(int argc, char** argv) {
  cli::CommonOpts common;
  std::string image_path, camera_path, target_path;
  int out_width = -1, out_height = -1;
  CLI::App app{"Resample an image into an ideal pinhole view", "rectify"};
  cli::add_common(app, common);
  app.add_option("--image", image_path, "source PNG")->required();
  app.add_option("--camera", camera_path, "source camera JSON")->required();
  app.add_option("--target", target_path, "target pinhole camera JSON")->required();
  app.add_option("--width", out_width, "output width (default: input width)")
      ->capture_default_str();
  app.add_option("--height", out_height, "output height (default: input height)")
      ->capture_default_str();
  if (const int code = cli::parse_args(app, argc, argv); code >= 0) return code;

  try {
    const ImageBuffer image = read_png_rgb(image_path);
    const CameraModel src = read_camera(camera_path);
    const CameraModel target = read_camera(target_path);
    if (!std::holds_alternative<PinholeParams>(target))
      throw std::invalid_argument(target_path + ": rectification target must be a pinhole camera");
    const PinholeParams dst = std::get<PinholeParams>(target);

    const RectifyResult result = rectify(image, src, dst, out_width, out_height);

    const auto out = cli::prepare_out(common);
    write_png_rgb((out / "rectified.png").string(), result.image);
    cli::write_mask_png(out / "mask.png", result.mask);

    json report;
    report["command"] = "rectify";
    report["config"] = json{{"image", image_path},
                            {"camera", camera_path},
                            {"target", target_path},
                            {"width", out_width},
                            {"height", out_height},
                            {"seed", common.seed},
                            {"out", common.out}};
    report["source_camera"] = cli::camera_json(src);
    report["target_camera"] = cli::camera_json(target);
    report["mapped_fraction"] = result.mask.fraction_on();
    cli::write_report(out, "rectify.json", report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitValidation;
  }
  return cli::kExitOk;
}
