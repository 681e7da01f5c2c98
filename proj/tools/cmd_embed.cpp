// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/embed/camera_rays.hpp"
#include "camgeom/io/pose_io.hpp"
#include "camgeom/io/tensor_io.hpp"
#include "common.hpp"

namespace {

using namespace camgeom;
using nlohmann::json;

}  // namespace

int run_embed(int argc, char** argv) {
  cli::CommonOpts common;
  std::string camera_path, pose_path;
  int width = 32, height = 24;
  FourierConfig fc;
  bool no_translation = false;
  CLI::App app{"Per-pixel Fourier camera-ray embeddings", "embed"};
  cli::add_common(app, common);
  app.add_option("--camera", camera_path, "pinhole camera JSON")->required();
  app.add_option("--pose", pose_path, "world-to-camera pose file (default: identity)");
  app.add_option("--width", width, "embedding grid width")->capture_default_str();
  app.add_option("--height", height, "embedding grid height")->capture_default_str();
  app.add_option("--k-origin", fc.K_o, "origin harmonics")->capture_default_str();
  app.add_option("--k-ray", fc.K_r, "ray harmonics")->capture_default_str();
  app.add_option("--mu", fc.mu, "maximum encoding frequency")->capture_default_str();
  app.add_flag("--no-translation", no_translation,
               "omit the +t term from the encoded ray directions");
  if (const int code = cli::parse_args(app, argc, argv); code >= 0) return code;

  try {
    const CameraModel model = read_camera(camera_path);
    if (!std::holds_alternative<PinholeParams>(model))
      throw std::invalid_argument(camera_path + ": ray embeddings expect a pinhole camera");
    const PinholeParams K = std::get<PinholeParams>(model);
    const Pose pose = pose_path.empty() ? Pose::Identity() : read_pose(pose_path);

    const RayGrid rays = camera_rays(K, pose, height, width, !no_translation);
    const CameraEmbedding embedding = camera_embedding(rays, fc);
    const auto out = cli::prepare_out(common);
    write_tensor((out / "embedding.bin").string(), tensor_from_embedding(embedding));

    json report;
    report["command"] = "embed";
    report["config"] = json{{"camera", camera_path},
                            {"pose", pose_path},
                            {"width", width},
                            {"height", height},
                            {"k_origin", fc.K_o},
                            {"k_ray", fc.K_r},
                            {"mu", fc.mu},
                            {"no_translation", no_translation},
                            {"seed", common.seed},
                            {"out", common.out}};
    report["camera"] = cli::camera_json(model);
    report["channels"] = embedding.channels;
    report["tensor_file"] = "embedding.bin";
    cli::write_report(out, "embed.json", report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitValidation;
  }
  return cli::kExitOk;
}
