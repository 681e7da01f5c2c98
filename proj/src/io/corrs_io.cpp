// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/io/corrs_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "camgeom/io/detail/text.hpp"

namespace camgeom {

namespace {

using nlohmann::json;

[[noreturn]] void fail_line(const std::string& path, int line, const std::string& what) {
  throw std::invalid_argument(path + ":" + std::to_string(line) + ": " + what);
}

Eigen::VectorXd number_array(const json& j, const char* field, int n, const std::string& path,
                             int line) {
  if (!j.contains(field))
    fail_line(path, line, std::string("missing field \"") + field + "\"");
  const json& a = j[field];
  if (!a.is_array() || static_cast<int>(a.size()) != n)
    fail_line(path, line,
              std::string("field \"") + field + "\" must be an array of " + std::to_string(n) +
                  " numbers");
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) {
    if (!a[i].is_number())
      fail_line(path, line, std::string("field \"") + field + "\" must contain numbers only");
    v(i) = a[i].get<double>();
  }
  return v;
}

}  // namespace

void write_correspondences(const std::string& path, const CorrespondenceSet& corrs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (size_t v = 0; v < corrs.views.size(); ++v) {
    for (const auto& [P, p] : corrs.views[v].pairs) {
      json j;
      j["view"] = v;
      j["P"] = {P.x(), P.y(), P.z()};
      j["p"] = {p.x(), p.y()};
      out << j.dump() << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

CorrespondenceSet read_correspondences(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);

  CorrespondenceSet corrs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c); }))
      continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail_line(path, lineno, e.what());
    }
    if (!j.is_object()) fail_line(path, lineno, "expected a JSON object");
    if (!j.contains("view") || !j["view"].is_number_unsigned())
      fail_line(path, lineno, "missing non-negative integer field \"view\"");
    for (const auto& [key, value] : j.items()) {
      (void)value;
      if (key != "view" && key != "P" && key != "p")
        fail_line(path, lineno, "unexpected field \"" + key + "\"");
    }
    const auto view = j["view"].get<size_t>();
    const Eigen::VectorXd P = number_array(j, "P", 3, path, lineno);
    const Eigen::VectorXd p = number_array(j, "p", 2, path, lineno);
    if (view >= corrs.views.size()) corrs.views.resize(view + 1);
    corrs.views[view].pairs.emplace_back(Point3(P(0), P(1), P(2)), Pixel(p(0), p(1)));
  }
  return corrs;
}

}  // namespace camgeom
