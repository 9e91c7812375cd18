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

// Statistical measures for 8-bit image planes: histogram, adjacent-pixel
// correlation, Shannon entropy, NPCR / UACI / MAE, MSE / PSNR.

#ifndef LDCT_ANALYSIS_HPP_
#define LDCT_ANALYSIS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldct/cipher.hpp"
#include "ldct/matrix.hpp"

namespace ldct {

using Histogram = std::array<std::uint64_t, 256>;

enum class Direction { kHorizontal, kVertical, kDiagonal };

const char* direction_name(Direction d);

Histogram histogram(const Plane& plane);

// Pearson correlation between every pixel and its neighbour at (0,+1),
// (+1,0) or (+1,+1), over the full population of pairs. Throws DomainError
// when either side has zero variance, DimensionError below 2x2.
double adjacent_correlation(const Plane& plane, Direction d);

// Percent of positions where the planes differ.
double npcr(const Plane& c1, const Plane& c2);
// Mean |c1 - c2| / 255, in percent.
double uaci(const Plane& c1, const Plane& c2);
double mae(const Plane& c1, const Plane& c2);

// Bits per pixel over the 256-bin empirical distribution.
double entropy(const Plane& plane);

double mse(const Plane& f, const Plane& g);
// 20 log10(max(f) / sqrt(MSE)); +infinity when the planes are identical.
// Not symmetric: the peak comes from the first argument.
double psnr(const Plane& f, const Plane& g);

inline constexpr std::uint64_t kDefaultScatterSeed = 20260101;

struct ScatterSample {
  std::uint64_t seed = 0;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
};

// `count` adjacent (value, neighbour) pairs drawn without replacement with a
// minstd linear congruential generator. count equal to the number of pairs
// returns the whole population in row-major order. Throws DomainError when
// count exceeds the population.
ScatterSample scatter_sample(const Plane& plane, Direction d, std::size_t count,
                             std::uint64_t seed = kDefaultScatterSeed);

struct Correlations {
  double horizontal = 0.0;
  double vertical = 0.0;
  double diagonal = 0.0;
};

struct ComponentStats {
  std::string name;
  Histogram histogram{};
  Correlations correlation;
  double entropy = 0.0;
};

struct PairStats {
  std::string a;
  std::string b;
  double npcr = 0.0;
  double uaci = 0.0;
  double mae = 0.0;
  double mse = 0.0;
  double psnr = 0.0;
};

struct AnalysisReport {
  std::string image;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<ComponentStats> components;
  std::vector<PairStats> pairs;
};

inline constexpr std::array<const char*, 3> kComponentNames = {"R", "G", "B"};

ComponentStats component_stats(std::string name, const Plane& plane);
PairStats pair_stats(std::string a, std::string b, const Plane& c1,
                     const Plane& c2);

// Per-component statistics of each supplied image ("original/R", ...), plus
// original-vs-encrypted and original-vs-decrypted pairs when present.
AnalysisReport full_report(std::string image, const ImageRGB& original,
                           const std::optional<ImageRGB>& encrypted,
                           const std::optional<ImageRGB>& decrypted);

}  // namespace ldct

#endif  // LDCT_ANALYSIS_HPP_
