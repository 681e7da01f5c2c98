// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>

#include "camgeom/rig/rig.hpp"

namespace camgeom {

// A rig document is a JSON object:
//   {
//     "canonical_index": 0,
//     "cameras": [
//       {"camera_file": "cam0.json", "extrinsic": "r00 r01 ... 0 0 0 1"},
//       ...
//     ]
//   }
// Each extrinsic is an embedded 4x4 row-major whitespace text block mapping
// camera coordinates into the canonical frame (the same convention as
// RigCamera::extrinsic). Camera files are resolved relative to the rig file's
// directory on read; write_rig emits one camera file per entry next to the
// rig document using the given basenames.

Rig read_rig(const std::string& path);
void write_rig(const std::string& path, const Rig& rig,
               const std::vector<std::string>& camera_basenames);

}  // namespace camgeom
