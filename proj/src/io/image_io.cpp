// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include "camgeom/io/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <vector>

#include "camgeom/io/detail/text.hpp"

namespace camgeom {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

[[noreturn]] void fail(const std::string& path, const char* what) {
  throw std::runtime_error(path + ": " + what);
}

// Decodes any PNG color layout to packed rows of `channels` 8- or 16-bit
// samples. Returns the row buffer; rows are height * stride bytes.
struct DecodedPng {
  png_uint_32 width = 0, height = 0;
  int channels = 0;
  int bit_depth = 0;
  std::vector<unsigned char> rows;
  size_t stride = 0;
};

DecodedPng decode_png(const std::string& path, bool want_rgb8) {
  FilePtr f = open_file(path, "rb");
  unsigned char sig[8];
  if (std::fread(sig, 1, 8, f.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0)
    fail(path, "not a PNG file");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(path, "png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "PNG decode error");
  }
  png_init_io(png, f.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  if (want_rgb8) {
    // Normalize every input layout to 8-bit RGB.
    png_set_expand(png);
    if (png_get_bit_depth(png, info) == 16) png_set_strip_16(png);
    const png_byte color = png_get_color_type(png, info);
    if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA)
      png_set_gray_to_rgb(png);
    png_set_strip_alpha(png);
  } else {
    // Depth layer: must already be 16-bit grayscale; deliver little-endian.
    if (png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY ||
        png_get_bit_depth(png, info) != 16) {
      png_destroy_read_struct(&png, &info, nullptr);
      fail(path, "expected a 16-bit grayscale PNG");
    }
    png_set_swap(png);
  }
  png_read_update_info(png, info);

  DecodedPng out;
  out.width = png_get_image_width(png, info);
  out.height = png_get_image_height(png, info);
  out.channels = png_get_channels(png, info);
  out.bit_depth = png_get_bit_depth(png, info);
  out.stride = png_get_rowbytes(png, info);
  out.rows.resize(out.stride * out.height);

  std::vector<png_bytep> row_ptrs(out.height);
  for (png_uint_32 y = 0; y < out.height; ++y) row_ptrs[y] = out.rows.data() + y * out.stride;
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

void encode_png(const std::string& path, png_uint_32 width, png_uint_32 height, int color_type,
                int bit_depth, const std::vector<unsigned char>& rows, size_t stride) {
  FilePtr f = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    fail(path, "png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "PNG encode error");
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  if (bit_depth == 16) png_set_swap(png);  // rows are host little-endian

  std::vector<png_bytep> row_ptrs(height);
  for (png_uint_32 y = 0; y < height; ++y)
    row_ptrs[y] = const_cast<png_bytep>(rows.data() + y * stride);
  png_write_image(png, row_ptrs.data());
  png_write_end(png, info);
  png_destroy_write_struct(&png, &info);
}

// ---- PFM -------------------------------------------------------------------

// One whitespace-delimited header token (PFM headers have no comments).
std::string pfm_token(std::istream& in, const std::string& path) {
  std::string tok;
  if (!(in >> tok)) fail(path, "truncated PFM header");
  return tok;
}

void byteswap32(std::vector<float>& v) {
  for (float& x : v) {
    unsigned char b[4];
    std::memcpy(b, &x, 4);
    std::swap(b[0], b[3]);
    std::swap(b[1], b[2]);
    std::memcpy(&x, b, 4);
  }
}

// Reads samples in top-down row order regardless of on-disk bottom-up layout.
std::vector<float> read_pfm_samples(const std::string& path, int expect_channels, int& width,
                                    int& height) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);

  const std::string magic = pfm_token(in, path);
  const int channels = magic == "Pf" ? 1 : magic == "PF" ? 3 : 0;
  if (channels == 0) fail(path, "not a PFM file (magic must be Pf or PF)");
  if (channels != expect_channels)
    fail(path, expect_channels == 1 ? "expected a single-channel PFM (Pf)"
                                    : "expected a three-channel PFM (PF)");

  try {
    width = std::stoi(pfm_token(in, path));
    height = std::stoi(pfm_token(in, path));
  } catch (const std::exception&) {
    fail(path, "malformed PFM dimensions");
  }
  if (width <= 0 || height <= 0) fail(path, "non-positive PFM dimensions");
  double scale = 0.0;
  try {
    scale = std::stod(pfm_token(in, path));
  } catch (const std::exception&) {
    fail(path, "malformed PFM scale");
  }
  if (scale == 0.0) fail(path, "PFM scale must be non-zero");
  in.get();  // single whitespace byte separating header and data

  const size_t n = static_cast<size_t>(width) * height * channels;
  std::vector<float> file_order(n);
  in.read(reinterpret_cast<char*>(file_order.data()), static_cast<std::streamsize>(n * 4));
  if (static_cast<size_t>(in.gcount()) != n * 4) fail(path, "truncated PFM data");
  if (scale > 0.0) byteswap32(file_order);  // positive scale = big-endian data

  // Flip bottom-up file rows into top-down memory rows.
  std::vector<float> samples(n);
  const size_t row = static_cast<size_t>(width) * channels;
  for (int y = 0; y < height; ++y)
    std::memcpy(samples.data() + static_cast<size_t>(y) * row,
                file_order.data() + static_cast<size_t>(height - 1 - y) * row, row * 4);
  return samples;
}

void write_pfm_samples(const std::string& path, int width, int height, int channels,
                       const std::vector<float>& samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << (channels == 1 ? "Pf" : "PF") << '\n' << width << ' ' << height << '\n' << "-1.0\n";
  const size_t row = static_cast<size_t>(width) * channels;
  for (int y = height - 1; y >= 0; --y)
    out.write(reinterpret_cast<const char*>(samples.data() + static_cast<size_t>(y) * row),
              static_cast<std::streamsize>(row * 4));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

// ---- color images ----------------------------------------------------------

ImageBuffer read_png_rgb(const std::string& path) {
  const DecodedPng dec = decode_png(path, /*want_rgb8=*/true);
  if (dec.channels != 3 || dec.bit_depth != 8) fail(path, "unsupported PNG layout");
  ImageBuffer img(static_cast<int>(dec.width), static_cast<int>(dec.height));
  for (png_uint_32 y = 0; y < dec.height; ++y) {
    const unsigned char* row = dec.rows.data() + y * dec.stride;
    for (png_uint_32 x = 0; x < dec.width; ++x)
      for (int c = 0; c < 3; ++c)
        img.at(static_cast<int>(y), static_cast<int>(x), c) = row[3 * x + c] / 255.0;
  }
  return img;
}

void write_png_rgb(const std::string& path, const ImageBuffer& image) {
  if (image.width <= 0 || image.height <= 0)
    throw std::invalid_argument("write_png_rgb: empty image");
  const size_t stride = static_cast<size_t>(image.width) * 3;
  std::vector<unsigned char> rows(stride * image.height);
  for (int y = 0; y < image.height; ++y)
    for (int x = 0; x < image.width; ++x)
      for (int c = 0; c < 3; ++c) {
        const double v = std::clamp(image.at(y, x, c), 0.0, 1.0);
        rows[y * stride + 3 * x + c] = static_cast<unsigned char>(std::lround(v * 255.0));
      }
  encode_png(path, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height),
             PNG_COLOR_TYPE_RGB, 8, rows, stride);
}

// ---- depth maps ------------------------------------------------------------

DepthMap read_png_depth16(const std::string& path) {
  const DecodedPng dec = decode_png(path, /*want_rgb8=*/false);
  DepthMap depth(static_cast<int>(dec.width), static_cast<int>(dec.height));
  for (png_uint_32 y = 0; y < dec.height; ++y) {
    const unsigned char* row = dec.rows.data() + y * dec.stride;
    for (png_uint_32 x = 0; x < dec.width; ++x) {
      uint16_t mm;
      std::memcpy(&mm, row + 2 * x, 2);
      depth.set(static_cast<int>(y), static_cast<int>(x), mm / 1000.0);
    }
  }
  return depth;
}

void write_png_depth16(const std::string& path, const DepthMap& depth) {
  if (depth.width <= 0 || depth.height <= 0)
    throw std::invalid_argument("write_png_depth16: empty depth map");
  const size_t stride = static_cast<size_t>(depth.width) * 2;
  std::vector<unsigned char> rows(stride * depth.height, 0);
  for (int y = 0; y < depth.height; ++y)
    for (int x = 0; x < depth.width; ++x) {
      uint16_t mm = 0;
      if (depth.is_valid(y, x)) {
        const long v = std::lround(depth.at(y, x) * 1000.0);
        mm = static_cast<uint16_t>(std::clamp(v, 1L, 65535L));
      }
      std::memcpy(rows.data() + y * stride + 2 * x, &mm, 2);
    }
  encode_png(path, static_cast<png_uint_32>(depth.width), static_cast<png_uint_32>(depth.height),
             PNG_COLOR_TYPE_GRAY, 16, rows, stride);
}

// ---- PFM -------------------------------------------------------------------

ScalarMap read_pfm(const std::string& path) {
  int w = 0, h = 0;
  const std::vector<float> samples = read_pfm_samples(path, 1, w, h);
  ScalarMap map(w, h);
  for (size_t i = 0; i < samples.size(); ++i) map.value[i] = samples[i];
  return map;
}

void write_pfm(const std::string& path, const ScalarMap& map) {
  if (map.width <= 0 || map.height <= 0) throw std::invalid_argument("write_pfm: empty map");
  std::vector<float> samples(map.value.size());
  for (size_t i = 0; i < samples.size(); ++i) samples[i] = static_cast<float>(map.value[i]);
  write_pfm_samples(path, map.width, map.height, 1, samples);
}

ImageBuffer read_pfm_rgb(const std::string& path) {
  int w = 0, h = 0;
  const std::vector<float> samples = read_pfm_samples(path, 3, w, h);
  ImageBuffer img(w, h);
  for (size_t i = 0; i < samples.size(); ++i) img.data[i] = samples[i];
  return img;
}

void write_pfm_rgb(const std::string& path, const ImageBuffer& image) {
  if (image.width <= 0 || image.height <= 0)
    throw std::invalid_argument("write_pfm_rgb: empty image");
  std::vector<float> samples(image.data.size());
  for (size_t i = 0; i < samples.size(); ++i) samples[i] = static_cast<float>(image.data[i]);
  write_pfm_samples(path, image.width, image.height, 3, samples);
}

// ---- extension dispatch ----------------------------------------------------

DepthMap read_depth(const std::string& path) {
  const std::string ext = io_detail::extension_lower(path);
  if (ext == ".png") return read_png_depth16(path);
  if (ext == ".pfm") {
    const ScalarMap map = read_pfm(path);
    DepthMap depth(map.width, map.height);
    for (int y = 0; y < map.height; ++y)
      for (int x = 0; x < map.width; ++x) {
        const double d = map.at(y, x);
        depth.set(y, x, std::isfinite(d) && d > 0.0 ? d : 0.0);
      }
    return depth;
  }
  throw std::invalid_argument("read_depth: unsupported extension \"" + ext + "\" (" + path + ")");
}

void write_depth(const std::string& path, const DepthMap& depth) {
  const std::string ext = io_detail::extension_lower(path);
  if (ext == ".png") {
    write_png_depth16(path, depth);
    return;
  }
  if (ext == ".pfm") {
    ScalarMap map(depth.width, depth.height);
    for (int y = 0; y < depth.height; ++y)
      for (int x = 0; x < depth.width; ++x)
        map.at(y, x) = depth.is_valid(y, x) ? depth.at(y, x) : 0.0;
    write_pfm(path, map);
    return;
  }
  throw std::invalid_argument("write_depth: unsupported extension \"" + ext + "\" (" + path + ")");
}

}  // namespace camgeom
