// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/io/camera_io.hpp"

#include <stdexcept>

#include <json.hpp>

#include "camgeom/io/detail/text.hpp"

namespace camgeom {

namespace {
using nlohmann::json;
}

CameraModel model_with_tag(const std::string& tag) {
  if (tag == "pinhole") return PinholeParams{0, 0, 0, 0};
  if (tag == "brown") return BrownConradyParams{{0, 0, 0, 0}, 0, 0, 0, 0, 0};
  if (tag == "ucm") return UcmParams{0, 0, 0, 0, 0};
  if (tag == "eucm") return EucmParams{0, 0, 0, 0, 0, 0};
  if (tag == "ds") return DsParams{0, 0, 0, 0, 0, 0};
  throw std::invalid_argument("unknown camera model tag: \"" + tag + "\"");
}

std::string camera_to_json(const CameraModel& model) {
  json j;
  j["model"] = model_tag(model);
  const auto names = param_names(model);
  const Eigen::VectorXd vals = get_params(model);
  for (size_t i = 0; i < names.size(); ++i) j[names[i]] = vals(static_cast<int>(i));
  return j.dump(2) + "\n";
}

CameraModel camera_from_json(const std::string& json_text, const std::string& where) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument(where + ": expected a JSON object");
  if (!j.contains("model") || !j["model"].is_string())
    throw std::invalid_argument(where + ": missing string field \"model\"");

  CameraModel model = model_with_tag(j["model"].get<std::string>());
  const auto names = param_names(model);
  Eigen::VectorXd vals(static_cast<int>(names.size()));
  for (size_t i = 0; i < names.size(); ++i) {
    if (!j.contains(names[i]) || !j[names[i]].is_number())
      throw std::invalid_argument(where + ": missing numeric field \"" + names[i] + "\"");
    vals(static_cast<int>(i)) = j[names[i]].get<double>();
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key == "model") continue;
    bool known = false;
    for (const auto& n : names) known = known || key == n;
    if (!known) throw std::invalid_argument(where + ": unexpected field \"" + key + "\"");
  }

  model = with_params(model, vals);
  try {
    validate(model);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
  return model;
}

void write_camera(const std::string& path, const CameraModel& model) {
  io_detail::write_file_text(path, camera_to_json(model));
}

CameraModel read_camera(const std::string& path) {
  return camera_from_json(io_detail::read_file_text(path), path);
}

}  // namespace camgeom
