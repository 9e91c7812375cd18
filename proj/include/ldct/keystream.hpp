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

// Keystream planes derived from a Lorenz trajectory.
//
// Pipeline per key: initial conditions -> RK4 trajectory -> 1D DCT of x, y, z
// -> high-energy coefficients -> outer products XY, XZ, YZ -> bilinear resize
// to N x N -> pairwise circular convolution -> floor(|.|) mod 256 -> per-row
// and per-column argsort permutations.
//
// Outer products stay rank one through separable resizing, and the circular
// convolution of two rank-one matrices factors into two 1D circular
// convolutions, so the pipeline never materializes a dense N x N real product.
// The dense routines below are the reference definitions.

#ifndef LDCT_KEYSTREAM_HPP_
#define LDCT_KEYSTREAM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ldct/dct.hpp"
#include "ldct/lorenz.hpp"
#include "ldct/matrix.hpp"

namespace ldct {

struct KeystreamConfig {
  LorenzParams params;
  double t_start = 0.0;
  double t_end = 50.0;
  double dt = 0.001;
  double energy_fraction = kDefaultEnergyFraction;
};

struct TruncatedVectors {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;
};

// dct1 + energy_select of each coordinate; the kept values are returned in
// ascending coefficient-index order.
TruncatedVectors truncated_vectors(const Trajectory& traj,
                                   double fraction = kDefaultEnergyFraction);

// m = col * row^T
struct RankOneMatrix {
  std::vector<double> col;
  std::vector<double> row;

  std::size_t rows() const { return col.size(); }
  std::size_t cols() const { return row.size(); }
  RealMatrix dense() const;
};

struct OuterProducts {
  RankOneMatrix xy;
  RankOneMatrix xz;
  RankOneMatrix yz;
};

// XY = vx (x) vy, XZ = vx (x) vz, YZ = vy (x) vz.
// Throws DegenerateKeystreamError if any input is empty.
OuterProducts outer_products(std::span<const double> vx,
                             std::span<const double> vy,
                             std::span<const double> vz);

// Corner-aligned linear interpolation of a length-L sequence onto n points:
// output i samples source position i (L-1)/(n-1). n == 1 keeps v[0].
std::vector<double> resize_linear(std::span<const double> v, std::size_t n);

// Bilinear, corner-aligned, to n x n.
RealMatrix resize_bilinear(const RealMatrix& m, std::size_t n);

// Factor-wise resize; equal to resize_bilinear(m.dense(), n) in exact
// arithmetic.
RankOneMatrix resize_bilinear(const RankOneMatrix& m, std::size_t n);

// c[i] = sum_p a[p] b[(i - p) mod n]
std::vector<double> circular_conv1(std::span<const double> a,
                                   std::span<const double> b);

// c[i][j] = sum_{p,q} a[p][q] b[(i-p) mod N][(j-q) mod N], by definition.
// O(N^4): intended for small matrices and as a cross-check.
RealMatrix circular_conv2(const RealMatrix& a, const RealMatrix& b);

// floor(|c|) mod 256
std::uint8_t quantize_byte(double c);

Plane circular_conv2_mod(const RealMatrix& a, const RealMatrix& b);
Plane circular_conv2_mod(const RankOneMatrix& a, const RankOneMatrix& b);

// Stable ascending argsort: perm[k] is the column holding the k-th smallest
// value of the row; ties keep column order.
Permutation stable_argsort(std::span<const std::uint8_t> values);
std::vector<Permutation> row_permutations(const Plane& bytes);
std::vector<Permutation> col_permutations(const Plane& bytes);

Permutation invert(const Permutation& perm);

struct KeystreamPlane {
  Plane bytes;
  // Entrywise equal to `bytes`. Exact small integers, so adding and then
  // subtracting it returns the addend unchanged at zero cells.
  RealMatrix real_twin;
  std::vector<Permutation> row_perm;
  std::vector<Permutation> col_perm;

  static KeystreamPlane from_bytes(Plane bytes);
  std::size_t size() const { return bytes.rows(); }
};

enum class PlaneLabel : std::size_t { kXY = 0, kXZ = 1, kYZ = 2 };

// Planes indexed by PlaneLabel. Component c (R, G, B) uses planes[c].
struct RoundKeystream {
  std::array<KeystreamPlane, 3> planes;

  const KeystreamPlane& for_component(std::size_t c) const { return planes[c]; }
};

// Throws DimensionError for n < 2 and DegenerateKeystreamError when a
// coordinate has no retained coefficient.
RoundKeystream build_round_keystream(const SecretKey& key, std::size_t n,
                                     const KeystreamConfig& config = {});

}  // namespace ldct

#endif  // LDCT_KEYSTREAM_HPP_
