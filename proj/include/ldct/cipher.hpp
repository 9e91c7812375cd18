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

// Colour image cipher built from two payloads per component:
//
//   * the difference image (component minus the reconstruction from its
//     high-energy DCT2 coefficients, mod 256), pushed through three rounds of
//     XOR / row-column shuffle / cyclic shift keyed by the Lorenz planes;
//   * a real-valued carrier: signed log10 of those coefficients, each row i
//     rotated left by i, added to the sum of the three rounds' keystream
//     planes.
//
// Decryption peels the rounds in reverse, subtracts the keystream sum, undoes
// the log, inverts the DCT and adds the difference image back.

#ifndef LDCT_CIPHER_HPP_
#define LDCT_CIPHER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "ldct/dct.hpp"
#include "ldct/keystream.hpp"
#include "ldct/lorenz.hpp"
#include "ldct/matrix.hpp"

namespace ldct {

inline constexpr std::size_t kRounds = 3;
inline constexpr std::array<int, 3> kDefaultShifts = {3, 7, 13};

// Coefficients whose magnitude falls in [1, kMinCoeffMagnitude) are raised to
// kMinCoeffMagnitude before embedding, so their logarithm never collides
// with the zero sentinel of an empty carrier cell.
inline constexpr double kMinCoeffMagnitude = 1.0 + 1e-12;

struct ImageRGB {
  std::array<Plane, 3> planes;

  std::size_t width() const { return planes[0].cols(); }
  std::size_t height() const { return planes[0].rows(); }

  friend bool operator==(const ImageRGB&, const ImageRGB&) = default;
};

using DifferencePlane = Plane;
using CarrierPlane = RealMatrix;
using KeyTriple = std::array<SecretKey, 3>;

struct CipherBundle {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::array<std::uint16_t, kRounds> shifts{};
  // rotations[k] belongs to the k-th key.
  std::array<std::array<std::uint8_t, 3>, kRounds> rotations{};
  std::array<DifferencePlane, 3> dic;
  std::array<CarrierPlane, 3> carriers;

  friend bool operator==(const CipherBundle&, const CipherBundle&) = default;
};

// clamp(round(v), 0, 255); NaN maps to 0.
Plane round_to_bytes(const RealMatrix& m);

struct Difference {
  DifferencePlane dic;
  Plane recon;
};

// recon = clamp(round(reconstruct_sparse(sparse))), dic = component - recon
// (mod 256), so recon + dic == component exactly.
Difference make_difference(const Plane& component, const SparseCoeffs& sparse);

// Horizontal pass then vertical pass of XOR, argsort gather, cyclic left
// shift by n_shift and XOR with the equally shifted keystream.
DifferencePlane shuffle_encrypt(const DifferencePlane& plane,
                                const KeystreamPlane& ks, int n_shift);
DifferencePlane shuffle_decrypt(const DifferencePlane& plane,
                                const KeystreamPlane& ks, int n_shift);

// Raises magnitudes in [1, kMinCoeffMagnitude) to kMinCoeffMagnitude.
void guard_unit_magnitudes(SparseCoeffs& s);

// sign(c) log10|c| at each coefficient position, then row i rotated left by
// i. Throws DomainError for |c| < 1, DimensionError unless s is n x n.
RealMatrix log_forward(const SparseCoeffs& s, std::size_t n);

// Rotates row i right by i; every non-zero v becomes sign(v) 10^|v|.
SparseCoeffs log_inverse(const RealMatrix& m);

CarrierPlane embed_coeffs(const RealMatrix& logm, const KeystreamPlane& ks);
CarrierPlane embed_coeffs(const RealMatrix& logm, const RealMatrix& base);
RealMatrix extract_coeffs(const CarrierPlane& carrier, const KeystreamPlane& ks);
RealMatrix extract_coeffs(const CarrierPlane& carrier, const RealMatrix& base);

// Entrywise sum of the real twins of every round's plane for one component.
// Exact: at most 3 * 255.
RealMatrix keystream_sum(std::span<const RoundKeystream> rounds,
                         std::size_t component);

// Throws DimensionError for non-square or smaller than 2 x 2 images.
CipherBundle encrypt_image(const ImageRGB& img, const KeyTriple& keys,
                           std::array<int, 3> shifts = kDefaultShifts,
                           const KeystreamConfig& config = {});

// Uses the bundle's shift schedule. Wrong keys yield an unrelated image; there
// is no authentication.
ImageRGB decrypt_image(const CipherBundle& bundle, const KeyTriple& keys,
                       const KeystreamConfig& config = {});

}  // namespace ldct

#endif  // LDCT_CIPHER_HPP_
