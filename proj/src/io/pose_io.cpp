// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/io/pose_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "camgeom/io/detail/text.hpp"

namespace camgeom {

void write_pose_text(std::ostream& os, const Pose& pose) {
  const Eigen::Matrix4d m = pose.matrix();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (c) os << ' ';
      os << io_detail::format_double(m(r, c));
    }
    os << '\n';
  }
}

Pose parse_pose_text(const std::string& text, const std::string& where) {
  std::istringstream in(text);
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!(in >> m(r, c)))
        throw std::invalid_argument(where + ": expected 16 numeric entries (4x4 row-major)");
  std::string extra;
  if (in >> extra) throw std::invalid_argument(where + ": trailing data after 16 entries");

  if ((m.row(3) - Eigen::RowVector4d(0, 0, 0, 1)).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument(where + ": last row must be 0 0 0 1");
  Pose pose;
  pose.R = m.topLeftCorner<3, 3>();
  pose.t = m.topRightCorner<3, 1>();
  if (!pose.is_rigid(1e-6))
    throw std::invalid_argument(where + ": rotation block is not a proper rotation");
  return pose;
}

void write_pose(const std::string& path, const Pose& pose) {
  std::ostringstream ss;
  write_pose_text(ss, pose);
  io_detail::write_file_text(path, ss.str());
}

Pose read_pose(const std::string& path) {
  return parse_pose_text(io_detail::read_file_text(path), path);
}

}  // namespace camgeom
