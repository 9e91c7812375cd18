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

#include "ldct/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>

#include "ldct/error.hpp"

namespace ldct {

namespace {

void require_same_dims(const Plane& a, const Plane& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": planes differ in size");
  }
}

std::pair<std::size_t, std::size_t> offset(Direction d) {
  switch (d) {
    case Direction::kHorizontal:
      return {0, 1};
    case Direction::kVertical:
      return {1, 0};
    case Direction::kDiagonal:
      return {1, 1};
  }
  return {0, 1};
}

// Visits (value, neighbour) for every pixel whose neighbour is in bounds.
template <typename Fn>
void for_each_pair(const Plane& plane, Direction d, Fn&& fn) {
  const auto [dr, dc] = offset(d);
  for (std::size_t r = 0; r + dr < plane.rows(); ++r)
    for (std::size_t c = 0; c + dc < plane.cols(); ++c)
      fn(plane(r, c), plane(r + dr, c + dc));
}

std::size_t pair_count(const Plane& plane, Direction d) {
  const auto [dr, dc] = offset(d);
  if (plane.rows() < dr || plane.cols() < dc) return 0;
  return (plane.rows() - dr) * (plane.cols() - dc);
}

}  // namespace

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::kHorizontal:
      return "horizontal";
    case Direction::kVertical:
      return "vertical";
    case Direction::kDiagonal:
      return "diagonal";
  }
  return "?";
}

Histogram histogram(const Plane& plane) {
  Histogram h{};
  for (std::uint8_t v : plane.values()) ++h[v];
  return h;
}

double adjacent_correlation(const Plane& plane, Direction d) {
  if (plane.rows() < 2 || plane.cols() < 2) {
    throw DimensionError("adjacent_correlation: plane must be at least 2x2");
  }
  const auto n = static_cast<double>(pair_count(plane, d));
  double sum_c = 0.0;
  double sum_d = 0.0;
  for_each_pair(plane, d, [&](double c, double v) {
    sum_c += c;
    sum_d += v;
  });
  const double mean_c = sum_c / n;
  const double mean_d = sum_d / n;

  double cov = 0.0;
  double var_c = 0.0;
  double var_d = 0.0;
  for_each_pair(plane, d, [&](double c, double v) {
    const double dc = c - mean_c;
    const double dv = v - mean_d;
    cov += dc * dv;
    var_c += dc * dc;
    var_d += dv * dv;
  });
  if (var_c == 0.0 || var_d == 0.0) {
    throw DomainError(std::string("adjacent_correlation: zero variance (") +
                      direction_name(d) + ")");
  }
  return std::clamp(cov / std::sqrt(var_c * var_d), -1.0, 1.0);
}

double npcr(const Plane& c1, const Plane& c2) {
  require_same_dims(c1, c2, "npcr");
  if (c1.empty()) return 0.0;
  std::size_t changed = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    changed += c1.values()[i] != c2.values()[i] ? 1 : 0;
  }
  return 100.0 * static_cast<double>(changed) / static_cast<double>(c1.size());
}

double mae(const Plane& c1, const Plane& c2) {
  require_same_dims(c1, c2, "mae");
  if (c1.empty()) return 0.0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    total += static_cast<std::uint64_t>(
        std::abs(int{c1.values()[i]} - int{c2.values()[i]}));
  }
  return static_cast<double>(total) / static_cast<double>(c1.size());
}

double uaci(const Plane& c1, const Plane& c2) {
  require_same_dims(c1, c2, "uaci");
  if (c1.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    total += std::abs(int{c1.values()[i]} - int{c2.values()[i]}) / 255.0;
  }
  return 100.0 * total / static_cast<double>(c1.size());
}

double entropy(const Plane& plane) {
  if (plane.empty()) return 0.0;
  const Histogram h = histogram(plane);
  const auto n = static_cast<double>(plane.size());
  double bits = 0.0;
  for (std::uint64_t count : h) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / n;
    bits -= p * std::log2(p);
  }
  return bits;
}

double mse(const Plane& f, const Plane& g) {
  require_same_dims(f, g, "mse");
  if (f.empty()) return 0.0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int d = int{f.values()[i]} - int{g.values()[i]};
    total += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(total) / static_cast<double>(f.size());
}

double psnr(const Plane& f, const Plane& g) {
  const double err = mse(f, g);
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  const auto peak = static_cast<double>(
      *std::max_element(f.values().begin(), f.values().end()));
  return 20.0 * std::log10(peak / std::sqrt(err));
}

ScatterSample scatter_sample(const Plane& plane, Direction d, std::size_t count,
                             std::uint64_t seed) {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> all;
  all.reserve(pair_count(plane, d));
  for_each_pair(plane, d, [&](std::uint8_t c, std::uint8_t v) { all.emplace_back(c, v); });
  if (count > all.size()) {
    throw DomainError("scatter_sample: requested " + std::to_string(count) +
                      " pairs, only " + std::to_string(all.size()) + " available");
  }

  ScatterSample out;
  out.seed = seed;
  if (count == all.size()) {
    out.pairs = std::move(all);
    return out;
  }
  // Partial Fisher-Yates. The modulo reduction is used instead of a standard
  // distribution so the sample is identical across standard libraries.
  std::minstd_rand gen(static_cast<std::minstd_rand::result_type>(seed));
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(gen()) % (all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(count);
  out.pairs = std::move(all);
  return out;
}

ComponentStats component_stats(std::string name, const Plane& plane) {
  ComponentStats s;
  s.name = std::move(name);
  s.histogram = histogram(plane);
  s.entropy = entropy(plane);
  s.correlation.horizontal = adjacent_correlation(plane, Direction::kHorizontal);
  s.correlation.vertical = adjacent_correlation(plane, Direction::kVertical);
  s.correlation.diagonal = adjacent_correlation(plane, Direction::kDiagonal);
  return s;
}

PairStats pair_stats(std::string a, std::string b, const Plane& c1,
                     const Plane& c2) {
  PairStats p;
  p.a = std::move(a);
  p.b = std::move(b);
  p.npcr = npcr(c1, c2);
  p.uaci = uaci(c1, c2);
  p.mae = mae(c1, c2);
  p.mse = mse(c1, c2);
  p.psnr = psnr(c1, c2);
  return p;
}

AnalysisReport full_report(std::string image, const ImageRGB& original,
                           const std::optional<ImageRGB>& encrypted,
                           const std::optional<ImageRGB>& decrypted) {
  AnalysisReport report;
  report.image = std::move(image);
  report.width = original.width();
  report.height = original.height();

  auto add_components = [&](const std::string& label, const ImageRGB& img) {
    for (std::size_t c = 0; c < 3; ++c) {
      report.components.push_back(
          component_stats(label + "/" + kComponentNames[c], img.planes[c]));
    }
  };
  auto add_pairs = [&](const std::string& label, const ImageRGB& img) {
    for (std::size_t c = 0; c < 3; ++c) {
      const std::string comp = kComponentNames[c];
      report.pairs.push_back(pair_stats("original/" + comp, label + "/" + comp,
                                        original.planes[c], img.planes[c]));
    }
  };

  add_components("original", original);
  if (encrypted) {
    add_components("encrypted", *encrypted);
    add_pairs("encrypted", *encrypted);
  }
  if (decrypted) {
    add_components("decrypted", *decrypted);
    add_pairs("decrypted", *decrypted);
  }
  return report;
}

}  // namespace ldct
