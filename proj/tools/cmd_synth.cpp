// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <random>
#include <vector>

#include "camgeom/io/corrs_io.hpp"
#include "camgeom/io/pose_io.hpp"
#include "camgeom/io/rig_io.hpp"
#include "camgeom/synth/scene.hpp"
#include "common.hpp"

namespace {

using namespace camgeom;
using nlohmann::json;

struct SynthOpts {
  cli::CommonOpts common;
  std::string scene = "plane";
  std::string camera_file;  // optional: load instead of building from flags
  std::string model = "pinhole";
  int width = 320, height = 240;
  double fx = 300.0, fy = 300.0;
  double cx = -1.0, cy = -1.0;  // negative = pixel-grid center
  double alpha = 0.6, beta = 1.0, xi = -0.2;
  double k1 = -0.1, k2 = 0.01, k3 = 0.0, p1 = 0.0, p2 = 0.0;
  int views = 4;
  int points = 80;
  double noise = 0.0;
  double plane_z = 5.0;
  int rig_cameras = 0;
  double rig_radius = 0.3;
  int pano_width = 256, pano_height = 128;
  double pano_plane_drop = 1.5;
};

CameraModel build_camera(const SynthOpts& o) {
  if (!o.camera_file.empty()) return read_camera(o.camera_file);
  const double cx = o.cx >= 0.0 ? o.cx : 0.5 * (o.width - 1);
  const double cy = o.cy >= 0.0 ? o.cy : 0.5 * (o.height - 1);
  CameraModel model = model_with_tag(o.model);
  Eigen::VectorXd p = get_params(model);
  p(0) = o.fx;
  p(1) = o.fy;
  p(2) = cx;
  p(3) = cy;
  if (std::holds_alternative<BrownConradyParams>(model)) {
    p(4) = o.k1;
    p(5) = o.k2;
    p(6) = o.k3;
    p(7) = o.p1;
    p(8) = o.p2;
  } else if (std::holds_alternative<UcmParams>(model)) {
    p(4) = o.alpha;
  } else if (std::holds_alternative<EucmParams>(model)) {
    p(4) = o.alpha;
    p(5) = o.beta;
  } else if (std::holds_alternative<DsParams>(model)) {
    p(4) = o.alpha;
    p(5) = o.xi;
  }
  model = with_params(model, p);
  validate(model);
  return model;
}

// View poses for image rendering: small jittered offsets facing the scene.
std::vector<Pose> render_poses(const SynthOpts& o, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<Pose> poses;
  for (int k = 0; k < o.views; ++k) {
    if (o.scene == "box") {
      const Point3 position(0.4 * uni(rng), 0.4 * uni(rng), 0.4 * uni(rng));
      const double yaw = 2.0 * M_PI * k / o.views;
      const double pitch = 0.2 * uni(rng);
      const Point3 dir(std::cos(pitch) * std::cos(yaw), std::cos(pitch) * std::sin(yaw),
                       std::sin(pitch));
      poses.push_back(look_at_pose(position, position + dir));
    } else {
      const Point3 position(0.3 * uni(rng), 0.3 * uni(rng), 0.2 * uni(rng));
      const Point3 target(0.3 * uni(rng), 0.3 * uni(rng), o.plane_z);
      poses.push_back(look_at_pose(position, target));
    }
  }
  return poses;
}

json resolved_config(const SynthOpts& o) {
  return json{{"scene", o.scene},
              {"camera_file", o.camera_file},
              {"model", o.model},
              {"width", o.width},
              {"height", o.height},
              {"fx", o.fx},
              {"fy", o.fy},
              {"cx", o.cx},
              {"cy", o.cy},
              {"alpha", o.alpha},
              {"beta", o.beta},
              {"xi", o.xi},
              {"k1", o.k1},
              {"k2", o.k2},
              {"k3", o.k3},
              {"p1", o.p1},
              {"p2", o.p2},
              {"views", o.views},
              {"points", o.points},
              {"noise", o.noise},
              {"plane_z", o.plane_z},
              {"rig_cameras", o.rig_cameras},
              {"rig_radius", o.rig_radius},
              {"pano_width", o.pano_width},
              {"pano_height", o.pano_height},
              {"pano_plane_drop", o.pano_plane_drop},
              {"seed", o.common.seed},
              {"out", o.common.out}};
}

}  // namespace

int run_synth(int argc, char** argv) {
  SynthOpts o;
  CLI::App app{"Deterministic synthetic dataset generator", "synth"};
  cli::add_common(app, o.common);
  app.add_option("--scene", o.scene, "plane | box | pano")
      ->check(CLI::IsMember({"plane", "box", "pano"}))
      ->capture_default_str();
  app.add_option("--camera", o.camera_file, "camera JSON to use instead of model flags");
  app.add_option("--model", o.model, "pinhole | brown | ucm | eucm | ds")
      ->check(CLI::IsMember({"pinhole", "brown", "ucm", "eucm", "ds"}))
      ->capture_default_str();
  app.add_option("--width", o.width)->capture_default_str();
  app.add_option("--height", o.height)->capture_default_str();
  app.add_option("--fx", o.fx)->capture_default_str();
  app.add_option("--fy", o.fy)->capture_default_str();
  app.add_option("--cx", o.cx, "principal point x (negative = image center)")
      ->capture_default_str();
  app.add_option("--cy", o.cy, "principal point y (negative = image center)")
      ->capture_default_str();
  app.add_option("--alpha", o.alpha, "ucm/eucm/ds alpha")->capture_default_str();
  app.add_option("--beta", o.beta, "eucm beta")->capture_default_str();
  app.add_option("--xi", o.xi, "ds xi")->capture_default_str();
  app.add_option("--k1", o.k1)->capture_default_str();
  app.add_option("--k2", o.k2)->capture_default_str();
  app.add_option("--k3", o.k3)->capture_default_str();
  app.add_option("--p1", o.p1)->capture_default_str();
  app.add_option("--p2", o.p2)->capture_default_str();
  app.add_option("--views", o.views, "rendered views / correspondence views")
      ->capture_default_str();
  app.add_option("--points", o.points, "correspondence pairs per view")->capture_default_str();
  app.add_option("--noise", o.noise, "observation noise std-dev (pixels)")
      ->capture_default_str();
  app.add_option("--plane-z", o.plane_z, "plane scene distance")->capture_default_str();
  app.add_option("--rig-cameras", o.rig_cameras, "also emit a ring rig of this many cameras")
      ->capture_default_str();
  app.add_option("--rig-radius", o.rig_radius)->capture_default_str();
  app.add_option("--pano-width", o.pano_width)->capture_default_str();
  app.add_option("--pano-height", o.pano_height)->capture_default_str();
  app.add_option("--pano-plane-drop", o.pano_plane_drop,
                 "height of the scanner above the pano scene's floor")
      ->capture_default_str();
  if (const int code = cli::parse_args(app, argc, argv); code >= 0) return code;

  try {
    const CameraModel model = build_camera(o);
    const auto out = cli::prepare_out(o.common);
    json report;
    report["command"] = "synth";
    report["config"] = resolved_config(o);
    report["camera"] = cli::camera_json(model);
    json files = json::array();
    auto record = [&files](const std::string& name) { files.push_back(name); };

    write_camera((out / "camera.json").string(), model);
    record("camera.json");

    std::mt19937_64 rng(o.common.seed);
    if (o.scene == "pano") {
      const Panorama pano = synthetic_plane_panorama(o.pano_width, o.pano_height,
                                                     o.pano_plane_drop);
      write_png_rgb((out / "pano.png").string(), pano.rgb);
      write_depth((out / "pano_range.pfm").string(), pano.range);
      record("pano.png");
      record("pano_range.pfm");
    } else {
      const auto poses = render_poses(o, rng);
      for (int k = 0; k < o.views; ++k) {
        const RenderedView view =
            o.scene == "box"
                ? render_box(model, poses[k], o.width, o.height, BoxSceneConfig{})
                : render_plane(model, poses[k], o.width, o.height,
                               PlaneSceneConfig{o.plane_z, 1.0});
        char name[64];
        std::snprintf(name, sizeof(name), "view_%02d.png", k);
        write_png_rgb((out / name).string(), view.image);
        record(name);
        std::snprintf(name, sizeof(name), "depth_%02d.pfm", k);
        write_depth((out / name).string(), view.depth);
        record(name);
        std::snprintf(name, sizeof(name), "pose_%02d.txt", k);
        write_pose((out / name).string(), poses[k]);
        record(name);
      }
    }

    CorrespondenceConfig cc;
    cc.n_views = o.views;
    cc.points_per_view = o.points;
    cc.pixel_noise = o.noise;
    cc.seed = o.common.seed;
    const SyntheticCalibration calib = synthetic_correspondences(model, o.width, o.height, cc);
    write_correspondences((out / "corrs.jsonl").string(), calib.corrs);
    record("corrs.jsonl");

    if (o.rig_cameras > 0) {
      const Rig rig = ring_rig(model, o.rig_cameras, o.rig_radius);
      std::vector<std::string> basenames;
      for (int i = 0; i < o.rig_cameras; ++i)
        basenames.push_back("rig_cam_" + std::to_string(i) + ".json");
      write_rig((out / "rig.json").string(), rig, basenames);
      record("rig.json");
      for (const auto& b : basenames) record(b);
    }

    report["files"] = files;
    cli::write_report(out, "report.json", report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitValidation;
  }
  return cli::kExitOk;
}
