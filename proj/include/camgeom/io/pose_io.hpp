// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <iosfwd>
#include <string>

#include "camgeom/core/pose.hpp"

namespace camgeom {

// Poses travel as 4x4 row-major whitespace-separated text; the last row must
// read 0 0 0 1 and the rotation block must be orthonormal with det +1
// (checked to 1e-6 on read). Numbers are printed shortest-round-trip, so a
// write/read cycle is bit-exact.

void write_pose(const std::string& path, const Pose& pose);
Pose read_pose(const std::string& path);

// Stream/string forms shared with readers that embed pose blocks inside other
// documents. `where` seeds error messages (file name, record index, ...).
void write_pose_text(std::ostream& os, const Pose& pose);
Pose parse_pose_text(const std::string& text, const std::string& where);

}  // namespace camgeom
