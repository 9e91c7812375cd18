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

#include "ldct/bundle.hpp"

#include <zlib.h>

#include <algorithm>
#include <bit>
#include <string>

#include "ldct/error.hpp"
#include "ldct/image_io.hpp"

namespace ldct {

namespace {

constexpr std::uint8_t kMagic[4] = {'L', 'D', 'C', 'T'};

class Writer {
 public:
  explicit Writer(std::vector<std::uint8_t>& out) : out_(out) {}

  template <typename T>
  void le(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }
  void f64(double v) { le(std::bit_cast<std::uint64_t>(v)); }
  void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }

 private:
  std::vector<std::uint8_t>& out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  template <typename T>
  T le() {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v = static_cast<T>(v | (static_cast<T>(in_[pos_++]) << (8 * i)));
    }
    return v;
  }
  double f64() { return std::bit_cast<double>(le<std::uint64_t>()); }
  std::span<const std::uint8_t> take(std::size_t n) {
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint32_t crc32(std::span<const std::uint8_t> bytes) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks for very large payloads.
  std::size_t off = 0;
  while (off < bytes.size()) {
    const std::size_t chunk = std::min<std::size_t>(bytes.size() - off, 1u << 30);
    crc = ::crc32(crc, bytes.data() + off, static_cast<uInt>(chunk));
    off += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

std::uint64_t bundle_size(std::uint64_t n) {
  return kBundleHeaderSize + 3 * n * n + 3 * 8 * n * n + 4;
}

std::vector<std::uint8_t> serialize_bundle(const CipherBundle& bundle) {
  const std::size_t n = bundle.width;
  if (bundle.width != bundle.height) {
    throw DimensionError("serialize_bundle: width and height differ");
  }
  for (std::size_t c = 0; c < 3; ++c) {
    if (bundle.dic[c].rows() != n || bundle.dic[c].cols() != n ||
        bundle.carriers[c].rows() != n || bundle.carriers[c].cols() != n) {
      throw DimensionError("serialize_bundle: payload dims differ from header");
    }
  }

  std::vector<std::uint8_t> out;
  out.reserve(bundle_size(n));
  Writer w(out);
  w.bytes(kMagic);
  w.le(kBundleVersion);
  w.le(bundle.width);
  w.le(bundle.height);
  w.le(static_cast<std::uint8_t>(kRounds));
  w.le(std::uint8_t{0});
  for (std::uint16_t s : bundle.shifts) w.le(s);
  for (const auto& rot : bundle.rotations)
    for (std::uint8_t r : rot) w.le(r);
  for (const auto& p : bundle.dic) w.bytes(p.values());
  for (const auto& m : bundle.carriers)
    for (double v : m.values()) w.f64(v);
  w.le(crc32(out));
  return out;
}

CipherBundle parse_bundle(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kBundleHeaderSize + 4) throw FormatError("bundle: file too short");
  if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw FormatError("bundle: bad magic");
  }
  Reader r(bytes.subspan(4));
  const auto version = r.le<std::uint16_t>();
  if (version != kBundleVersion) {
    throw FormatError("bundle: unsupported version " + std::to_string(version));
  }
  CipherBundle b;
  b.width = r.le<std::uint32_t>();
  b.height = r.le<std::uint32_t>();
  const auto rounds = r.le<std::uint8_t>();
  const auto flags = r.le<std::uint8_t>();
  if (rounds != kRounds) throw FormatError("bundle: round count must be 3");
  if (flags != 0) throw FormatError("bundle: unknown flags set");
  if (b.width != b.height) throw FormatError("bundle: width and height differ");
  if (b.width > (1u << 16)) throw FormatError("bundle: image side too large");
  for (auto& s : b.shifts) s = r.le<std::uint16_t>();
  for (auto& rot : b.rotations)
    for (auto& v : rot) v = r.le<std::uint8_t>();

  const std::uint64_t n = b.width;
  if (bytes.size() != bundle_size(n)) {
    throw FormatError("bundle: size " + std::to_string(bytes.size()) +
                      " does not match header (expected " +
                      std::to_string(bundle_size(n)) + ")");
  }
  const auto body = bytes.first(bytes.size() - 4);
  Reader tail(bytes.subspan(bytes.size() - 4));
  if (crc32(body) != tail.le<std::uint32_t>()) {
    throw ChecksumError("bundle: CRC mismatch");
  }

  for (auto& p : b.dic) {
    const auto raw = r.take(n * n);
    p = Plane(n, n, std::vector<std::uint8_t>(raw.begin(), raw.end()));
  }
  for (auto& m : b.carriers) {
    m = RealMatrix(n, n);
    for (double& v : m.values()) v = r.f64();
  }
  return b;
}

void write_bundle(const std::filesystem::path& path, const CipherBundle& bundle) {
  write_file(path, serialize_bundle(bundle));
}

CipherBundle read_bundle(const std::filesystem::path& path) {
  return parse_bundle(read_file(path));
}

}  // namespace ldct
