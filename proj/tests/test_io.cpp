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

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "ldct/bundle.hpp"
#include "ldct/error.hpp"
#include "ldct/image_io.hpp"
#include "test_util.hpp"

using namespace ldct;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

CipherBundle sample_bundle(std::size_t n, std::mt19937_64& rng) {
  CipherBundle b;
  b.width = b.height = static_cast<std::uint32_t>(n);
  b.shifts = {3, 700, 65535};
  b.rotations = {{{5, 11, 17}, {0, 1, 2}, {47, 46, 45}}};
  std::uniform_real_distribution<double> u(-8, 773);
  for (std::size_t c = 0; c < 3; ++c) {
    b.dic[c] = test::random_plane(n, n, rng);
    b.carriers[c] = RealMatrix(n, n);
    for (auto& v : b.carriers[c].values()) v = u(rng);
  }
  return b;
}

// Recompute the trailing CRC after editing a header byte.
void reseal(std::vector<std::uint8_t>& bytes) {
  const std::uint32_t crc =
      crc32(std::span<const std::uint8_t>(bytes.data(), bytes.size() - 4));
  for (int i = 0; i < 4; ++i) bytes[bytes.size() - 4 + i] = static_cast<std::uint8_t>(crc >> (8 * i));
}

}  // namespace

TEST_CASE("ppm: 1x1 white pixel") {
  auto bytes = bytes_of("P6\n1 1\n255\n");
  bytes.insert(bytes.end(), {255, 255, 255});
  const ImageRGB img = parse_ppm(bytes);
  CHECK(img.width() == 1);
  CHECK(img.height() == 1);
  for (const auto& p : img.planes) CHECK(p(0, 0) == 255);

  auto commented = bytes_of("P6\n# made by hand\n1 # width\n1\n255\n");
  commented.insert(commented.end(), {255, 255, 255});
  CHECK(parse_ppm(commented) == img);
}

TEST_CASE("ppm: rejections") {
  auto with_pixels = [](std::string header, std::size_t n) {
    auto b = bytes_of(header);
    b.insert(b.end(), n, 7);
    return b;
  };
  try {
    parse_ppm(bytes_of("P3\n1 1\n255\n255 255 255\n"));
    FAIL("P3 accepted");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("unsupported format P3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_ppm(with_pixels("P5\n1 1\n255\n", 1)), FormatError);
  CHECK_THROWS_AS(parse_ppm(with_pixels("P6\n1 1\n65535\n", 6)), FormatError);
  CHECK_THROWS_AS(parse_ppm(with_pixels("P6\n1 1\n15\n", 3)), FormatError);
  CHECK_THROWS_AS(parse_ppm(with_pixels("P6\n2 2\n255\n", 11)), FormatError);
  CHECK_THROWS_AS(parse_ppm(with_pixels("P6\n0 2\n255\n", 0)), FormatError);
  CHECK_THROWS_AS(parse_ppm(with_pixels("P6\nx 2\n255\n", 12)), FormatError);
  CHECK_THROWS_AS(parse_ppm(bytes_of("P6\n1 1\n255")), FormatError);
  CHECK_THROWS_AS(parse_ppm(bytes_of("")), FormatError);
  CHECK_THROWS_AS(parse_ppm(bytes_of("GIF89a")), FormatError);
}

TEST_CASE("ppm: save then load") {
  std::mt19937_64 rng(51);
  ImageRGB img;
  for (auto& p : img.planes) p = test::random_plane(13, 7, rng);
  const auto dir = test::scratch_dir("ppm");
  save_ppm(dir / "x.ppm", img);
  CHECK(load_ppm(dir / "x.ppm") == img);
  const auto enc = encode_ppm(img);
  CHECK(enc.size() == std::string("P6\n7 13\n255\n").size() + 13 * 7 * 3);
  CHECK(parse_ppm(enc) == img);

  const ImageRGB nat = load_ppm(test::data_path("astronaut.ppm"));
  CHECK(nat.width() == 256);
  CHECK(nat.height() == 256);
  CHECK(encode_ppm(nat) == read_file(test::data_path("astronaut.ppm")));

  save_pgm(dir / "g.pgm", img.planes[0]);
  const auto pgm = read_file(dir / "g.pgm");
  CHECK(pgm.size() == std::string("P5\n7 13\n255\n").size() + 13 * 7);
  CHECK_THROWS_AS(load_ppm(dir / "missing.ppm"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("crc32 check value") {
  CHECK(crc32(bytes_of("123456789")) == 0xCBF43926u);
  CHECK(crc32(bytes_of("")) == 0u);
}

TEST_CASE("bundle size and layout") {
  CHECK(bundle_size(2) == 143);
  CHECK(bundle_size(2) == kBundleHeaderSize + 3 * 4 + 3 * 4 * 8 + 4);
  CHECK(bundle_size(256) == 1769507);

  std::mt19937_64 rng(52);
  const CipherBundle b = sample_bundle(2, rng);
  const auto bytes = serialize_bundle(b);
  REQUIRE(bytes.size() == 143);
  CHECK(std::memcmp(bytes.data(), "LDCT", 4) == 0);
  CHECK(bytes[4] == 1);
  CHECK(bytes[5] == 0);
  CHECK(bytes[6] == 2);
  CHECK(bytes[10] == 2);
  CHECK(bytes[14] == 3);
  CHECK(bytes[15] == 0);
  CHECK(bytes[16] == 3);
  CHECK(bytes[18] == (700 & 0xFF));
  CHECK(bytes[19] == (700 >> 8));
  CHECK(bytes[20] == 0xFF);
  CHECK(bytes[21] == 0xFF);
  CHECK(bytes[22] == 5);
  CHECK(bytes[30] == 45);
  CHECK(bytes[31] == b.dic[0].values()[0]);
  double first = 0;
  std::memcpy(&first, bytes.data() + 31 + 12, 8);  // host is little-endian
  CHECK(first == b.carriers[0].values()[0]);
}

TEST_CASE("bundle round trip is bit-exact") {
  std::mt19937_64 rng(53);
  CipherBundle b = sample_bundle(16, rng);
  // awkward doubles survive untouched
  b.carriers[1].values()[0] = -0.0;
  b.carriers[1].values()[1] = std::numeric_limits<double>::denorm_min();
  b.carriers[1].values()[2] = 0.1 + 0.2;
  b.carriers[1].values()[3] = std::nextafter(765.0, 0.0);
  const auto bytes = serialize_bundle(b);
  const CipherBundle back = parse_bundle(bytes);
  CHECK(back == b);
  CHECK(std::signbit(back.carriers[1].values()[0]));
  CHECK(serialize_bundle(back) == bytes);

  const auto dir = test::scratch_dir("bundle");
  write_bundle(dir / "b.ldct", b);
  CHECK(read_file(dir / "b.ldct") == bytes);
  CHECK(read_bundle(dir / "b.ldct") == b);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bundle corruption and header errors") {
  std::mt19937_64 rng(54);
  const auto good = serialize_bundle(sample_bundle(4, rng));

  for (std::size_t pos : {std::size_t{31}, std::size_t{40}, good.size() - 20, good.size() - 1}) {
    auto bad = good;
    bad[pos] ^= 0x10;
    CHECK_THROWS_AS(parse_bundle(bad), ChecksumError);
  }

  auto edit = [&](std::size_t pos, std::uint8_t v) {
    auto bad = good;
    bad[pos] = v;
    reseal(bad);
    return bad;
  };
  CHECK_THROWS_AS(parse_bundle(edit(0, 'X')), FormatError);
  CHECK_THROWS_AS(parse_bundle(edit(4, 2)), FormatError);
  CHECK_THROWS_AS(parse_bundle(edit(14, 2)), FormatError);
  CHECK_THROWS_AS(parse_bundle(edit(15, 1)), FormatError);
  CHECK_THROWS_AS(parse_bundle(edit(10, 5)), FormatError);  // height != width

  auto shorter = good;
  shorter.resize(good.size() - 9);
  CHECK_THROWS_AS(parse_bundle(shorter), FormatError);
  auto longer = good;
  longer.insert(longer.end() - 4, 0);
  reseal(longer);
  CHECK_THROWS_AS(parse_bundle(longer), FormatError);
  CHECK_THROWS_AS(parse_bundle(std::vector<std::uint8_t>(10, 0)), FormatError);
}
