// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/io/ray_surface_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace camgeom {

namespace {

constexpr char kMagic[8] = {'R', 'A', 'Y', 'S', 'U', 'R', 'F', '\0'};

void put_u32(std::ostream& os, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& os, double v) {
  uint64_t u;
  std::memcpy(&u, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

uint32_t get_u32(std::istream& is, const std::string& path) {
  unsigned char b[4];
  if (!is.read(reinterpret_cast<char*>(b), 4)) throw std::runtime_error(path + ": truncated");
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

double get_f64(std::istream& is, const std::string& path) {
  unsigned char b[8];
  if (!is.read(reinterpret_cast<char*>(b), 8)) throw std::runtime_error(path + ": truncated");
  uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

}  // namespace

void write_ray_surface(const std::string& path, const RaySurface& surface) {
  if (surface.width <= 0 || surface.height <= 0 ||
      surface.directions.size() != static_cast<size_t>(surface.width) * surface.height)
    throw std::invalid_argument("write_ray_surface: inconsistent grid");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(kMagic, 8);
  put_u32(out, static_cast<uint32_t>(surface.height));
  put_u32(out, static_cast<uint32_t>(surface.width));
  for (const Point3& d : surface.directions)
    for (int i = 0; i < 3; ++i) put_f64(out, d(i));
  for (int i = 0; i < 3; ++i) put_f64(out, surface.origin(i));
  if (!out) throw std::runtime_error("write failed: " + path);
}

RaySurface read_ray_surface(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error(path + ": not a ray-surface file");
  RaySurface surface;
  surface.height = static_cast<int>(get_u32(in, path));
  surface.width = static_cast<int>(get_u32(in, path));
  if (surface.width <= 0 || surface.height <= 0)
    throw std::runtime_error(path + ": non-positive dimensions");
  surface.directions.resize(static_cast<size_t>(surface.width) * surface.height);
  for (Point3& d : surface.directions) {
    for (int i = 0; i < 3; ++i) d(i) = get_f64(in, path);
    const double n = d.norm();
    if (!(n > 0.0) || !d.allFinite()) throw std::runtime_error(path + ": invalid direction");
    d /= n;
  }
  for (int i = 0; i < 3; ++i) surface.origin(i) = get_f64(in, path);
  return surface;
}

}  // namespace camgeom
