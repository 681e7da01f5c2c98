// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cstdio>

#include "camgeom/metrics/depth_metrics.hpp"
#include "common.hpp"

namespace {

using namespace camgeom;
using nlohmann::json;

json report_json(const MetricsReport& r) {
  return json{{"abs_rel", r.abs_rel},     {"sq_rel", r.sq_rel},
              {"rmse", r.rmse},           {"rmse_log", r.rmse_log},
              {"mae_log10", r.mae_log10}, {"rmse_log10", r.rmse_log10},
              {"delta1", r.delta1},       {"delta2", r.delta2},
              {"delta3", r.delta3},       {"valid_count", r.valid_count},
              {"scale", r.scale}};
}

void print_table_row(const char* label, const MetricsReport& r) {
  std::printf("%-10s %9.4f %9.4f %9.4f %9.4f %9.4f %10.4f %7.3f %7.3f %7.3f %8d\n", label,
              r.abs_rel, r.sq_rel, r.rmse, r.rmse_log, r.mae_log10, r.rmse_log10, r.delta1,
              r.delta2, r.delta3, r.valid_count);
}

void print_table_header() {
  std::printf("%-10s %9s %9s %9s %9s %9s %10s %7s %7s %7s %8s\n", "frame", "abs_rel", "sq_rel",
              "rmse", "rmse_log", "mae_lg10", "rmse_lg10", "d<1.25", "d<1.25^2", "d<1.25^3",
              "valid");
}

}  // namespace

int run_metrics(int argc, char** argv) {
  cli::CommonOpts common;
  std::vector<std::string> gt_paths, pred_paths;
  std::string scaling = "median";
  double max_depth = kDepthMax;
  CLI::App app{"Depth-map error metrics", "metrics"};
  cli::add_common(app, common);
  app.add_option("--gt", gt_paths, "ground-truth depth file(s) (.pfm or .png)")->required();
  app.add_option("--pred", pred_paths, "predicted depth file(s), same order as --gt")
      ->required();
  app.add_option("--scaling", scaling, "none | median | shared")
      ->check(CLI::IsMember({"none", "median", "shared"}))
      ->capture_default_str();
  app.add_option("--max-depth", max_depth, "ground-truth cutoff (meters)")
      ->capture_default_str();
  if (const int code = cli::parse_args(app, argc, argv); code >= 0) return code;

  try {
    if (gt_paths.size() != pred_paths.size())
      throw std::invalid_argument("--gt and --pred must list the same number of files");
    std::vector<DepthMap> gts, preds;
    for (const auto& p : gt_paths) gts.push_back(read_depth(p));
    for (const auto& p : pred_paths) preds.push_back(read_depth(p));
    for (size_t i = 0; i < gts.size(); ++i)
      if (gts[i].width != preds[i].width || gts[i].height != preds[i].height)
        throw std::invalid_argument(pred_paths[i] + ": shape differs from " + gt_paths[i]);

    json report;
    report["command"] = "metrics";
    report["config"] = json{{"gt", gt_paths},
                            {"pred", pred_paths},
                            {"scaling", scaling},
                            {"max_depth", max_depth},
                            {"seed", common.seed},
                            {"out", common.out}};

    print_table_header();
    if (gts.size() == 1 && scaling != "shared") {
      const ScalingMode mode = scaling == "none" ? ScalingMode::None : ScalingMode::Median;
      const MetricsReport r = evaluate(preds[0], gts[0], mode, max_depth);
      print_table_row("frame_0", r);
      report["frames"] = json::array({report_json(r)});
      report["average"] = report_json(r);
    } else {
      if (scaling == "none")
        throw std::invalid_argument(
            "--scaling none supports a single frame pair; use median or shared");
      const RigMetrics rig = evaluate_rig(preds, gts, scaling == "shared", max_depth);
      json frames = json::array();
      for (size_t i = 0; i < rig.per_camera.size(); ++i) {
        const std::string label = "frame_" + std::to_string(i);
        print_table_row(label.c_str(), rig.per_camera[i]);
        frames.push_back(report_json(rig.per_camera[i]));
      }
      print_table_row("average", rig.average);
      report["frames"] = frames;
      report["average"] = report_json(rig.average);
    }

    const auto out = cli::prepare_out(common);
    cli::write_report(out, "metrics.json", report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitValidation;
  }
  return cli::kExitOk;
}
