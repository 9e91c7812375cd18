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

// LDCT cipher container, all integers little-endian:
//
//   offset  size       field
//   0       4          magic "LDCT"
//   4       2          version (1)
//   6       4          width
//   10      4          height (== width)
//   14      1          rounds (3)
//   15      1          flags (0, reserved)
//   16      2 x 3      shift schedule, one u16 per round
//   22      1 x 9      rotation schedule, three u8 per key
//   31      N*N x 3    encrypted difference planes R, G, B, row-major bytes
//   ...     8*N*N x 3  carrier planes R, G, B, row-major IEEE-754 binary64
//   end-4   4          CRC-32 (ISO-HDLC, as zlib) of every preceding byte

#ifndef LDCT_BUNDLE_HPP_
#define LDCT_BUNDLE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ldct/cipher.hpp"

namespace ldct {

inline constexpr std::uint16_t kBundleVersion = 1;
inline constexpr std::size_t kBundleHeaderSize = 31;

std::uint32_t crc32(std::span<const std::uint8_t> bytes);

// Total container size for an n x n image.
std::uint64_t bundle_size(std::uint64_t n);

std::vector<std::uint8_t> serialize_bundle(const CipherBundle& bundle);

// Throws FormatError on bad magic, version, round count, flags or size, and
// ChecksumError on a CRC mismatch.
CipherBundle parse_bundle(std::span<const std::uint8_t> bytes);

void write_bundle(const std::filesystem::path& path, const CipherBundle& bundle);
CipherBundle read_bundle(const std::filesystem::path& path);

}  // namespace ldct

#endif  // LDCT_BUNDLE_HPP_
