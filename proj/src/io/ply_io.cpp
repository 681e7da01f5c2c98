// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/io/ply_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace camgeom {

namespace {

const char* kProperties[6] = {"property float x",    "property float y",
                              "property float z",    "property uchar red",
                              "property uchar green", "property uchar blue"};

}  // namespace

void write_ply(const std::string& path, const PointCloud& cloud) {
  if (cloud.colors.size() != cloud.points.size())
    throw std::invalid_argument("write_ply: points/colors size mismatch");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");

  out << "ply\nformat binary_little_endian 1.0\n"
      << "element vertex " << cloud.points.size() << '\n';
  for (const char* p : kProperties) out << p << '\n';
  out << "end_header\n";

  for (size_t i = 0; i < cloud.points.size(); ++i) {
    float xyz[3] = {static_cast<float>(cloud.points[i].x()),
                    static_cast<float>(cloud.points[i].y()),
                    static_cast<float>(cloud.points[i].z())};
    out.write(reinterpret_cast<const char*>(xyz), 12);
    unsigned char rgb[3];
    for (int c = 0; c < 3; ++c)
      rgb[c] = static_cast<unsigned char>(
          std::lround(std::clamp(cloud.colors[i](c), 0.0, 1.0) * 255.0));
    out.write(reinterpret_cast<const char*>(rgb), 3);
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

PointCloud read_ply(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::string line;
  size_t n_vertices = 0;
  int prop_seen = 0;
  bool have_format = false, in_header = true;
  if (!std::getline(in, line) || line != "ply")
    throw std::runtime_error(path + ": not a PLY file");
  while (in_header && std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("comment", 0) == 0) continue;
    if (line == "format binary_little_endian 1.0") {
      have_format = true;
    } else if (line.rfind("element vertex ", 0) == 0) {
      n_vertices = std::stoull(line.substr(15));
    } else if (line.rfind("element ", 0) == 0) {
      throw std::runtime_error(path + ": unsupported element \"" + line + "\"");
    } else if (line.rfind("property", 0) == 0) {
      if (prop_seen >= 6 || line != kProperties[prop_seen])
        throw std::runtime_error(path + ": unsupported vertex layout (" + line + ")");
      ++prop_seen;
    } else if (line == "end_header") {
      in_header = false;
    } else {
      throw std::runtime_error(path + ": unrecognized header line \"" + line + "\"");
    }
  }
  if (in_header || !have_format || prop_seen != 6)
    throw std::runtime_error(path + ": incomplete PLY header");

  PointCloud cloud;
  cloud.points.resize(n_vertices);
  cloud.colors.resize(n_vertices);
  for (size_t i = 0; i < n_vertices; ++i) {
    float xyz[3];
    unsigned char rgb[3];
    if (!in.read(reinterpret_cast<char*>(xyz), 12) ||
        !in.read(reinterpret_cast<char*>(rgb), 3))
      throw std::runtime_error(path + ": truncated vertex data");
    cloud.points[i] = Point3(xyz[0], xyz[1], xyz[2]);
    cloud.colors[i] = Point3(rgb[0] / 255.0, rgb[1] / 255.0, rgb[2] / 255.0);
  }
  return cloud;
}

}  // namespace camgeom
