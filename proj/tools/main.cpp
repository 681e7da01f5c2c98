// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <cstring>
#include <iostream>
#include <string>

#include "common.hpp"

namespace {

struct Command {
  const char* name;
  int (*run)(int, char**);
  const char* blurb;
};

const Command kCommands[] = {
    {"synth", run_synth, "generate a synthetic dataset (images, depths, poses, correspondences)"},
    {"calibrate", run_calibrate, "refine camera intrinsics and poses from correspondences"},
    {"perturb", run_perturb, "perturbation-recovery experiment around a reference camera"},
    {"rectify", run_rectify, "resample an image into an ideal pinhole view"},
    {"warp-eval", run_warp_eval, "photometric loss of a depth+pose warp between two views"},
    {"metrics", run_metrics, "depth-map error metrics with optional median/shared scaling"},
    {"embed", run_embed, "per-pixel Fourier camera-ray embeddings"},
    {"scanproc", run_scanproc, "panorama crops and per-pixel surface normals"},
};

void print_usage(std::ostream& os) {
  os << "usage: camgeom <command> [options]\n\ncommands:\n";
  for (const auto& c : kCommands) os << "  " << c.name << "\n      " << c.blurb << "\n";
  os << "\nRun 'camgeom <command> --help' for the command's options.\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    print_usage(std::cerr);
    return camgeom::cli::kExitValidation;
  }
  const std::string name = argv[1];
  if (name == "--help" || name == "-h" || name == "help") {
    print_usage(std::cout);
    return camgeom::cli::kExitOk;
  }
  for (const auto& c : kCommands)
    if (name == c.name) return c.run(argc - 1, argv + 1);
  std::cerr << "error: unknown command \"" << name << "\"\n\n";
  print_usage(std::cerr);
  return camgeom::cli::kExitValidation;
}
