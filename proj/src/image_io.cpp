/*
 * Copyright 2026 The ldct Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ldct/image_io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "ldct/error.hpp"

namespace ldct {

namespace {

constexpr std::uint64_t kMaxSide = 1 << 16;

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and comments, then reads one unsigned decimal field.
  std::uint64_t field(const char* name) {
    skip_space_and_comments();
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFull) throw FormatError(std::string("ppm: ") + name + " too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw FormatError(std::string("ppm: malformed ") + name);
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw FormatError("ppm: missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

ImageRGB parse_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') throw FormatError("ppm: not a PNM file");
  if (bytes[1] != '6') {
    throw FormatError(std::string("ppm: unsupported format P") +
                      static_cast<char>(bytes[1]) + " (only binary P6)");
  }
  HeaderReader reader(bytes);
  const std::uint64_t width = reader.field("width");
  const std::uint64_t height = reader.field("height");
  const std::uint64_t maxval = reader.field("maxval");
  if (maxval != 255) {
    throw FormatError("ppm: maxval " + std::to_string(maxval) + " unsupported (need 255)");
  }
  reader.single_space();
  if (width == 0 || height == 0) throw FormatError("ppm: zero dimension");
  if (width > kMaxSide || height > kMaxSide) throw FormatError("ppm: image too large");

  const std::uint64_t needed = width * height * 3;
  if (bytes.size() - reader.pos() < needed) {
    throw FormatError("ppm: truncated raster, expected " + std::to_string(needed) +
                      " bytes");
  }
  ImageRGB img;
  for (auto& p : img.planes) p = Plane(height, width);
  const std::uint8_t* src = bytes.data() + reader.pos();
  for (std::size_t r = 0; r < height; ++r)
    for (std::size_t c = 0; c < width; ++c)
      for (std::size_t k = 0; k < 3; ++k) img.planes[k](r, c) = *src++;
  return img;
}

std::vector<std::uint8_t> encode_ppm(const ImageRGB& img) {
  const std::string header = "P6\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + img.width() * img.height() * 3);
  for (std::size_t r = 0; r < img.height(); ++r)
    for (std::size_t c = 0; c < img.width(); ++c)
      for (std::size_t k = 0; k < 3; ++k) out.push_back(img.planes[k](r, c));
  return out;
}

ImageRGB load_ppm(const std::filesystem::path& path) { return parse_ppm(read_file(path)); }

void save_ppm(const std::filesystem::path& path, const ImageRGB& img) {
  write_file(path, encode_ppm(img));
}

void save_pgm(const std::filesystem::path& path, const Plane& plane) {
  const std::string header = "P5\n" + std::to_string(plane.cols()) + " " +
                             std::to_string(plane.rows()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), plane.values().begin(), plane.values().end());
  write_file(path, out);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace ldct
