// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "camgeom/camera/models.hpp"
#include "camgeom/io/camera_io.hpp"
#include "camgeom/io/detail/text.hpp"
#include "camgeom/io/image_io.hpp"
#include "camgeom/photo/image.hpp"

namespace camgeom::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNoConvergence = 3;

struct CommonOpts {
  std::string out = "out";
  uint64_t seed = 0;
};

// --config/--seed/--out. Config files are plain key=value lines (CLI11's
// config reader); explicitly passed flags take precedence over file values.
inline void add_common(CLI::App& app, CommonOpts& opts) {
  app.set_config("--config", "", "key=value config file; explicit flags win");
  app.add_option("--seed", opts.seed, "random seed")->capture_default_str();
  app.add_option("--out", opts.out, "output directory")->capture_default_str();
}

inline std::filesystem::path prepare_out(const CommonOpts& opts) {
  std::filesystem::path dir(opts.out);
  std::filesystem::create_directories(dir);
  return dir;
}

// Parses CLI arguments; help/version requests exit 0, any parse problem is a
// validation failure (exit 2). Returns a code only when parsing ended the
// command; -1 means "parsed fine, keep going".
inline int parse_args(CLI::App& app, int argc, char** argv) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return -1;
}

inline void write_report(const std::filesystem::path& dir, const std::string& name,
                         const nlohmann::json& j) {
  io_detail::write_file_text((dir / name).string(), j.dump(2) + "\n");
}

inline nlohmann::json camera_json(const CameraModel& model) {
  return nlohmann::json::parse(camera_to_json(model));
}

inline nlohmann::json vector_json(const Eigen::VectorXd& v) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

// Loss-map dump: scalar values normalized by their maximum and mapped through
// a black-red-yellow-white ramp.
inline void write_heatmap(const std::filesystem::path& path, const ScalarMap& map) {
  double peak = 0.0;
  for (double v : map.value) peak = std::max(peak, v);
  if (peak <= 0.0) peak = 1.0;
  ImageBuffer img(map.width, map.height);
  for (int y = 0; y < map.height; ++y)
    for (int x = 0; x < map.width; ++x) {
      const double t = std::clamp(map.at(y, x) / peak, 0.0, 1.0);
      img.at(y, x, 0) = std::min(1.0, 3.0 * t);
      img.at(y, x, 1) = std::clamp(3.0 * t - 1.0, 0.0, 1.0);
      img.at(y, x, 2) = std::clamp(3.0 * t - 2.0, 0.0, 1.0);
    }
  write_png_rgb(path.string(), img);
}

inline void write_mask_png(const std::filesystem::path& path, const MaskImage& mask) {
  ImageBuffer img(mask.width, mask.height);
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x)
      for (int c = 0; c < 3; ++c) img.at(y, x, c) = mask.at(y, x) ? 1.0 : 0.0;
  write_png_rgb(path.string(), img);
}

}  // namespace camgeom::cli

// One entry point per command, each a self-contained CLI11 application.
int run_synth(int argc, char** argv);
int run_calibrate(int argc, char** argv);
int run_perturb(int argc, char** argv);
int run_rectify(int argc, char** argv);
int run_warp_eval(int argc, char** argv);
int run_metrics(int argc, char** argv);
int run_embed(int argc, char** argv);
int run_scanproc(int argc, char** argv);
