// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/io/rig_io.hpp"

#include <filesystem>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "camgeom/io/camera_io.hpp"
#include "camgeom/io/detail/text.hpp"
#include "camgeom/io/pose_io.hpp"

namespace camgeom {

namespace {
using nlohmann::json;
namespace fs = std::filesystem;
}  // namespace

Rig read_rig(const std::string& path) {
  json j;
  try {
    j = json::parse(io_detail::read_file_text(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("cameras") || !j["cameras"].is_array())
    throw std::invalid_argument(path + ": missing array field \"cameras\"");
  if (!j.contains("canonical_index") || !j["canonical_index"].is_number_integer())
    throw std::invalid_argument(path + ": missing integer field \"canonical_index\"");

  const fs::path base = fs::path(path).parent_path();
  Rig rig;
  rig.canonical_index = j["canonical_index"].get<int>();
  int k = 0;
  for (const json& entry : j["cameras"]) {
    const std::string where = path + " cameras[" + std::to_string(k) + "]";
    if (!entry.is_object() || !entry.contains("camera_file") || !entry["camera_file"].is_string())
      throw std::invalid_argument(where + ": missing string field \"camera_file\"");
    if (!entry.contains("extrinsic") || !entry["extrinsic"].is_string())
      throw std::invalid_argument(where + ": missing string field \"extrinsic\"");

    RigCamera cam;
    const fs::path cam_path = base / entry["camera_file"].get<std::string>();
    cam.model = read_camera(cam_path.string());
    cam.extrinsic = parse_pose_text(entry["extrinsic"].get<std::string>(), where + " extrinsic");
    rig.cameras.push_back(std::move(cam));
    ++k;
  }
  if (rig.cameras.empty()) throw std::invalid_argument(path + ": rig has no cameras");
  if (rig.canonical_index < 0 || rig.canonical_index >= rig.size())
    throw std::invalid_argument(path + ": canonical_index out of range");
  return rig;
}

void write_rig(const std::string& path, const Rig& rig,
               const std::vector<std::string>& camera_basenames) {
  if (camera_basenames.size() != rig.cameras.size())
    throw std::invalid_argument("write_rig: one basename per camera required");
  const fs::path base = fs::path(path).parent_path();

  json j;
  j["canonical_index"] = rig.canonical_index;
  j["cameras"] = json::array();
  for (size_t i = 0; i < rig.cameras.size(); ++i) {
    write_camera((base / camera_basenames[i]).string(), rig.cameras[i].model);
    std::ostringstream block;
    write_pose_text(block, rig.cameras[i].extrinsic);
    json entry;
    entry["camera_file"] = camera_basenames[i];
    entry["extrinsic"] = block.str();
    j["cameras"].push_back(entry);
  }
  io_detail::write_file_text(path, j.dump(2) + "\n");
}

}  // namespace camgeom
