// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/calib/calibrate.hpp"
#include "camgeom/io/corrs_io.hpp"
#include "camgeom/io/pose_io.hpp"
#include "common.hpp"

namespace {

using namespace camgeom;
using nlohmann::json;

}  // namespace

int run_calibrate(int argc, char** argv) {
  cli::CommonOpts common;
  std::string corrs_path, init_path;
  int max_iters = 200;
  CLI::App app{"Joint intrinsic + pose refinement from 2D-3D correspondences", "calibrate"};
  cli::add_common(app, common);
  app.add_option("--corrs", corrs_path, "correspondence file (line-delimited records)")
      ->required();
  app.add_option("--init", init_path, "initial camera JSON")->required();
  app.add_option("--max-iters", max_iters, "optimizer iteration cap")->capture_default_str();
  if (const int code = cli::parse_args(app, argc, argv); code >= 0) return code;

  try {
    const CorrespondenceSet corrs = read_correspondences(corrs_path);
    const CameraModel init = read_camera(init_path);
    if (corrs.views.empty())
      throw std::invalid_argument(corrs_path + ": no correspondence records");

    OptimizerConfig cfg;
    cfg.max_iters = max_iters;
    cfg.seed = common.seed;
    const CalibrationResult result = refine(init, corrs, cfg);

    const auto out = cli::prepare_out(common);
    write_camera((out / "calibrated.json").string(), result.model);
    json per_view = json::array();
    for (size_t v = 0; v < corrs.views.size(); ++v) {
      CorrespondenceSet one;
      one.views.push_back(corrs.views[v]);
      const ReprojectionStats stats =
          mean_reprojection_error(result.model, {result.poses[v]}, one);
      char name[64];
      std::snprintf(name, sizeof(name), "pose_%02d.txt", static_cast<int>(v));
      write_pose((out / name).string(), result.poses[v]);
      per_view.push_back(json{{"view", v},
                              {"pairs", corrs.views[v].pairs.size()},
                              {"mre_rms", stats.rms},
                              {"mean_sq", stats.mean_sq},
                              {"excluded", stats.excluded},
                              {"pose_file", name}});
    }

    json report;
    report["command"] = "calibrate";
    report["config"] = json{{"corrs", corrs_path},
                            {"init", init_path},
                            {"max_iters", max_iters},
                            {"seed", common.seed},
                            {"out", common.out}};
    report["camera"] = cli::camera_json(result.model);
    report["per_view"] = per_view;
    report["mre_rms"] = result.mre;
    report["mean_sq_error"] = result.mean_sq_error;
    report["iterations"] = result.iterations;
    report["converged"] = result.converged;
    cli::write_report(out, "calibration.json", report);

    if (!result.converged) {
      std::cerr << "calibrate: optimizer did not converge in " << max_iters << " iterations\n";
      return cli::kExitNoConvergence;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitValidation;
  }
  return cli::kExitOk;
}
