// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>

#include "camgeom/calib/calibrate.hpp"

namespace camgeom {

// Correspondence files are line-delimited JSON records
//   {"view": 0, "P": [x, y, z], "p": [u, v]}
// one pair per line; blank lines are skipped. Views are assembled from the
// "view" indices (0-based, gaps produce empty views). Parse errors report the
// offending 1-based line number.

void write_correspondences(const std::string& path, const CorrespondenceSet& corrs);
CorrespondenceSet read_correspondences(const std::string& path);

}  // namespace camgeom
