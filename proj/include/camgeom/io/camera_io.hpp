// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>

#include "camgeom/camera/models.hpp"

namespace camgeom {

// Cameras are stored as a JSON object with a "model" tag and a flat parameter
// map, e.g. {"model": "pinhole", "fx": 500.0, ...}. Doubles are printed with
// shortest-round-trip formatting, so any value of up to 17 significant digits
// survives a write/read cycle bit-exactly. Reading validates the parameters.

std::string camera_to_json(const CameraModel& model);
CameraModel camera_from_json(const std::string& json_text, const std::string& where);

void write_camera(const std::string& path, const CameraModel& model);
CameraModel read_camera(const std::string& path);

// Zero-initialized variant for a given tag ("pinhole", "brown", "ucm",
// "eucm", "ds"); throws std::invalid_argument on an unknown tag.
CameraModel model_with_tag(const std::string& tag);

}  // namespace camgeom
