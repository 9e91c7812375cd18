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

#ifndef LDCT_IMAGE_IO_HPP_
#define LDCT_IMAGE_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ldct/cipher.hpp"

namespace ldct {

// Binary P6, maxval 255, '#' comments allowed between header fields. Any
// other PNM flavour is rejected with FormatError.
ImageRGB parse_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const ImageRGB& img);

ImageRGB load_ppm(const std::filesystem::path& path);
void save_ppm(const std::filesystem::path& path, const ImageRGB& img);

// 8-bit single-channel P5, used for keystream and difference-plane dumps.
void save_pgm(const std::filesystem::path& path, const Plane& plane);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes);

}  // namespace ldct

#endif  // LDCT_IMAGE_IO_HPP_
