// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/io/tensor_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace camgeom {

void write_tensor(const std::string& path, const Tensor3& tensor) {
  const size_t n = static_cast<size_t>(tensor.height) * tensor.width * tensor.channels;
  if (tensor.height <= 0 || tensor.width <= 0 || tensor.channels <= 0 ||
      tensor.data.size() != n)
    throw std::invalid_argument("write_tensor: inconsistent shape");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << tensor.height << ' ' << tensor.width << ' ' << tensor.channels << '\n';
  out.write(reinterpret_cast<const char*>(tensor.data.data()),
            static_cast<std::streamsize>(n * 4));
  if (!out) throw std::runtime_error("write failed: " + path);
}

Tensor3 read_tensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error(path + ": missing header");
  Tensor3 t;
  std::istringstream hs(header);
  if (!(hs >> t.height >> t.width >> t.channels) || t.height <= 0 || t.width <= 0 ||
      t.channels <= 0)
    throw std::runtime_error(path + ": malformed header (want \"H W C\")");
  std::string extra;
  if (hs >> extra) throw std::runtime_error(path + ": trailing data in header");

  const size_t n = static_cast<size_t>(t.height) * t.width * t.channels;
  t.data.resize(n);
  in.read(reinterpret_cast<char*>(t.data.data()), static_cast<std::streamsize>(n * 4));
  if (static_cast<size_t>(in.gcount()) != n * 4)
    throw std::runtime_error(path + ": truncated tensor data");
  return t;
}

Tensor3 tensor_from_embedding(const CameraEmbedding& embedding) {
  Tensor3 t;
  t.height = embedding.height;
  t.width = embedding.width;
  t.channels = embedding.channels;
  t.data.resize(embedding.data.size());
  for (size_t i = 0; i < embedding.data.size(); ++i)
    t.data[i] = static_cast<float>(embedding.data[i]);
  return t;
}

}  // namespace camgeom
