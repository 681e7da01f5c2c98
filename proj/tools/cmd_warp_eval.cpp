// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/io/pose_io.hpp"
#include "camgeom/photo/losses.hpp"
#include "camgeom/photo/warp.hpp"
#include "common.hpp"

namespace {

using namespace camgeom;
using nlohmann::json;

}  // namespace

int run_warp_eval(int argc, char** argv) {
  cli::CommonOpts common;
  std::string target_image_path, target_depth_path, context_image_path;
  std::string camera_path, context_camera_path;
  std::string target_pose_path, context_pose_path;
  double alpha = kSsimAlpha, lambda_d = kSmoothnessLambda;
  CLI::App app{"Photometric self-supervision loss of a depth+pose warp", "warp-eval"};
  cli::add_common(app, common);
  app.add_option("--target-image", target_image_path, "target view PNG")->required();
  app.add_option("--target-depth", target_depth_path, "target depth (.pfm or .png)")
      ->required();
  app.add_option("--context-image", context_image_path, "context view PNG")->required();
  app.add_option("--camera", camera_path, "target camera JSON")->required();
  app.add_option("--context-camera", context_camera_path,
                 "context camera JSON (default: same as --camera)");
  app.add_option("--target-pose", target_pose_path, "world-to-target pose file")->required();
  app.add_option("--context-pose", context_pose_path, "world-to-context pose file")->required();
  app.add_option("--alpha", alpha, "SSIM weight in the photometric mix")->capture_default_str();
  app.add_option("--lambda-d", lambda_d, "smoothness weight")->capture_default_str();
  if (const int code = cli::parse_args(app, argc, argv); code >= 0) return code;

  try {
    const ImageBuffer target = read_png_rgb(target_image_path);
    const DepthMap depth = read_depth(target_depth_path);
    const ImageBuffer context = read_png_rgb(context_image_path);
    const CameraModel cam_t = read_camera(camera_path);
    const CameraModel cam_c =
        context_camera_path.empty() ? cam_t : read_camera(context_camera_path);
    const Pose pose_t = read_pose(target_pose_path);
    const Pose pose_c = read_pose(context_pose_path);
    if (depth.width != target.width || depth.height != target.height)
      throw std::invalid_argument(target_depth_path + ": depth/image shape mismatch");

    // Relative motion taking target-frame coordinates into the context frame.
    const Pose rel = pose_c * pose_t.inverse();
    const SampledImage synth = synthesize_view(context, depth, rel, cam_t, cam_c);
    const ScalarMap photo = photometric_loss(target, synth.image, alpha);
    const double smooth = smoothness(depth, target);
    const double total = total_loss(photo, &synth.mask, smooth, lambda_d);

    double masked_photo = 0.0;
    {
      size_t n = 0;
      for (int y = 0; y < photo.height; ++y)
        for (int x = 0; x < photo.width; ++x)
          if (synth.mask.at(y, x)) {
            masked_photo += photo.at(y, x);
            ++n;
          }
      if (n > 0) masked_photo /= static_cast<double>(n);
    }

    const auto out = cli::prepare_out(common);
    write_png_rgb((out / "synthesized.png").string(), synth.image);
    cli::write_mask_png(out / "mask.png", synth.mask);
    cli::write_heatmap(out / "loss.png", photo);

    json report;
    report["command"] = "warp-eval";
    report["config"] = json{{"target_image", target_image_path},
                            {"target_depth", target_depth_path},
                            {"context_image", context_image_path},
                            {"camera", camera_path},
                            {"context_camera", context_camera_path},
                            {"target_pose", target_pose_path},
                            {"context_pose", context_pose_path},
                            {"alpha", alpha},
                            {"lambda_d", lambda_d},
                            {"seed", common.seed},
                            {"out", common.out}};
    report["valid_fraction"] = synth.mask.fraction_on();
    report["photometric_masked_mean"] = masked_photo;
    report["smoothness"] = smooth;
    report["total_loss"] = total;
    cli::write_report(out, "warp_eval.json", report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitValidation;
  }
  return cli::kExitOk;
}
