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

#include "ldct/keystream.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "ldct/error.hpp"

namespace ldct {

namespace {

// Source position of output index i when stretching len points onto n.
struct Tap {
  std::size_t lo = 0;
  std::size_t hi = 0;
  double frac = 0.0;
};

Tap tap(std::size_t i, std::size_t len, std::size_t n) {
  if (n == 1 || len == 1) return {};
  const double pos = static_cast<double>(i) * static_cast<double>(len - 1) /
                     static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  if (lo >= len - 1) return {len - 1, len - 1, 0.0};
  return {lo, lo + 1, pos - static_cast<double>(lo)};
}

std::vector<double> kept_in_index_order(const SparseCoeffs& s) {
  std::vector<std::pair<std::size_t, double>> kept;
  kept.reserve(s.entries.size());
  for (const auto& e : s.entries) kept.emplace_back(e.col, e.value);
  std::sort(kept.begin(), kept.end());
  std::vector<double> out;
  out.reserve(kept.size());
  for (const auto& [idx, v] : kept) out.push_back(v);
  return out;
}

std::vector<double> truncate(std::span<const double> signal, double fraction) {
  return kept_in_index_order(energy_select(dct1(signal), fraction));
}

}  // namespace

TruncatedVectors truncated_vectors(const Trajectory& traj, double fraction) {
  return {truncate(traj.x, fraction), truncate(traj.y, fraction),
          truncate(traj.z, fraction)};
}

RealMatrix RankOneMatrix::dense() const {
  RealMatrix m(col.size(), row.size());
  for (std::size_t i = 0; i < col.size(); ++i)
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = col[i] * row[j];
  return m;
}

OuterProducts outer_products(std::span<const double> vx,
                             std::span<const double> vy,
                             std::span<const double> vz) {
  if (vx.empty() || vy.empty() || vz.empty()) {
    throw DegenerateKeystreamError(
        "outer_products: a truncated Lorenz vector is empty");
  }
  auto vec = [](std::span<const double> v) {
    return std::vector<double>(v.begin(), v.end());
  };
  return {{vec(vx), vec(vy)}, {vec(vx), vec(vz)}, {vec(vy), vec(vz)}};
}

std::vector<double> resize_linear(std::span<const double> v, std::size_t n) {
  std::vector<double> out(n);
  if (v.empty()) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const Tap t = tap(i, v.size(), n);
    out[i] = (1.0 - t.frac) * v[t.lo] + t.frac * v[t.hi];
  }
  return out;
}

RealMatrix resize_bilinear(const RealMatrix& m, std::size_t n) {
  RealMatrix out(n, n);
  if (m.empty()) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const Tap r = tap(i, m.rows(), n);
    for (std::size_t j = 0; j < n; ++j) {
      const Tap c = tap(j, m.cols(), n);
      const double top = (1.0 - c.frac) * m(r.lo, c.lo) + c.frac * m(r.lo, c.hi);
      const double bottom = (1.0 - c.frac) * m(r.hi, c.lo) + c.frac * m(r.hi, c.hi);
      out(i, j) = (1.0 - r.frac) * top + r.frac * bottom;
    }
  }
  return out;
}

RankOneMatrix resize_bilinear(const RankOneMatrix& m, std::size_t n) {
  return {resize_linear(m.col, n), resize_linear(m.row, n)};
}

std::vector<double> circular_conv1(std::span<const double> a,
                                   std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionError("circular_conv1: length mismatch");
  }
  const std::size_t n = a.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t p = 0; p < n; ++p) acc += a[p] * b[(i + n - p) % n];
    out[i] = acc;
  }
  return out;
}

RealMatrix circular_conv2(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square()) {
    throw DimensionError("circular_conv2: operands must be equal-size squares");
  }
  const std::size_t n = a.rows();
  RealMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          acc += a(p, q) * b((i + n - p) % n, (j + n - q) % n);
      out(i, j) = acc;
    }
  }
  return out;
}

std::uint8_t quantize_byte(double c) {
  return static_cast<std::uint8_t>(std::fmod(std::floor(std::fabs(c)), 256.0));
}

Plane circular_conv2_mod(const RealMatrix& a, const RealMatrix& b) {
  const RealMatrix c = circular_conv2(a, b);
  Plane out(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.size(); ++i) out.values()[i] = quantize_byte(c.values()[i]);
  return out;
}

// conv2(u v^T, s t^T)[i][j] = conv1(u, s)[i] * conv1(v, t)[j]
Plane circular_conv2_mod(const RankOneMatrix& a, const RankOneMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionError("circular_conv2_mod: operands must be equal-size squares");
  }
  const std::vector<double> col = circular_conv1(a.col, b.col);
  const std::vector<double> row = circular_conv1(a.row, b.row);
  Plane out(col.size(), row.size());
  for (std::size_t i = 0; i < col.size(); ++i)
    for (std::size_t j = 0; j < row.size(); ++j)
      out(i, j) = quantize_byte(col[i] * row[j]);
  return out;
}

Permutation stable_argsort(std::span<const std::uint8_t> values) {
  Permutation perm(values.size());
  std::iota(perm.begin(), perm.end(), std::uint32_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return values[a] < values[b];
  });
  return perm;
}

std::vector<Permutation> row_permutations(const Plane& bytes) {
  std::vector<Permutation> perms;
  perms.reserve(bytes.rows());
  for (std::size_t r = 0; r < bytes.rows(); ++r) perms.push_back(stable_argsort(bytes.row(r)));
  return perms;
}

std::vector<Permutation> col_permutations(const Plane& bytes) {
  return row_permutations(bytes.transposed());
}

Permutation invert(const Permutation& perm) {
  Permutation inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = static_cast<std::uint32_t>(k);
  return inv;
}

KeystreamPlane KeystreamPlane::from_bytes(Plane bytes) {
  KeystreamPlane ks;
  ks.real_twin = RealMatrix(bytes.rows(), bytes.cols());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    ks.real_twin.values()[i] = static_cast<double>(bytes.values()[i]);
  }
  ks.row_perm = row_permutations(bytes);
  ks.col_perm = col_permutations(bytes);
  ks.bytes = std::move(bytes);
  return ks;
}

RoundKeystream build_round_keystream(const SecretKey& key, std::size_t n,
                                     const KeystreamConfig& config) {
  if (n < 2) {
    throw DimensionError("build_round_keystream: N must be at least 2, got " +
                         std::to_string(n));
  }
  const State3 s0 = derive_initial_conditions(key);
  const Trajectory traj =
      integrate(config.params, s0, config.t_start, config.t_end, config.dt);
  const TruncatedVectors tv = truncated_vectors(traj, config.energy_fraction);
  const OuterProducts prod = outer_products(tv.x, tv.y, tv.z);

  const RankOneMatrix xy = resize_bilinear(prod.xy, n);
  const RankOneMatrix xz = resize_bilinear(prod.xz, n);
  const RankOneMatrix yz = resize_bilinear(prod.yz, n);

  RoundKeystream ks;
  ks.planes[static_cast<std::size_t>(PlaneLabel::kXY)] =
      KeystreamPlane::from_bytes(circular_conv2_mod(xy, xz));
  ks.planes[static_cast<std::size_t>(PlaneLabel::kXZ)] =
      KeystreamPlane::from_bytes(circular_conv2_mod(xz, yz));
  ks.planes[static_cast<std::size_t>(PlaneLabel::kYZ)] =
      KeystreamPlane::from_bytes(circular_conv2_mod(yz, xy));
  return ks;
}

}  // namespace ldct
