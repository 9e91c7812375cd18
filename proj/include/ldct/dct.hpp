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

// Orthonormal type-II DCT in one and two dimensions, its inverse, and
// high-energy coefficient selection.
//
//   X[k] = s(k) * sum_n x[n] cos(pi k (2n + 1) / 2L),
//   s(0) = sqrt(1/L), s(k) = sqrt(2/L)
//
// With this scaling the transform is orthogonal: Parseval holds exactly and
// the inverse is the transpose.

#ifndef LDCT_DCT_HPP_
#define LDCT_DCT_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ldct/matrix.hpp"

namespace ldct {

// Separable 2D transform: rows, then columns.
RealMatrix dct2(const RealMatrix& f);
RealMatrix idct2(const RealMatrix& coeffs);

// 1D transforms. Long inputs (Lorenz trajectories run to ~50k samples) go
// through an FFT; see fft.hpp.
std::vector<double> dct1(std::span<const double> x);
std::vector<double> idct1(std::span<const double> coeffs);

struct SparseEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Retained coefficients of one transform, sorted by descending |value| with
// ties in row-major order. A 1D sequence is treated as 1 x L.
struct SparseCoeffs {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseEntry> entries;
  // Energy of the kept entries over the total energy of the source.
  double energy_fraction = 1.0;
};

inline constexpr double kDefaultEnergyFraction = 0.999;

// Greedily keeps the largest-magnitude coefficients until their cumulative
// square reaches `fraction` of the total, then drops any kept coefficient
// with |value| < 1. Zero total energy yields an empty selection with
// energy_fraction 1. Throws DomainError unless 0 < fraction <= 1.
SparseCoeffs energy_select(const RealMatrix& coeffs,
                           double fraction = kDefaultEnergyFraction);
SparseCoeffs energy_select(std::span<const double> coeffs,
                           double fraction = kDefaultEnergyFraction);

// Scatter into a zero matrix of the recorded dims.
RealMatrix to_dense(const SparseCoeffs& s);

// idct2 of the scattered coefficients.
RealMatrix reconstruct_sparse(const SparseCoeffs& s);

// Sort entries by descending |value|, ties row-major, in place.
void sort_by_magnitude(std::vector<SparseEntry>& entries);

}  // namespace ldct

#endif  // LDCT_DCT_HPP_
