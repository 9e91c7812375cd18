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

#include "ldct/cipher.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ldct/error.hpp"

namespace ldct {

namespace {

std::size_t wrap_shift(int n_shift, std::size_t n) {
  const auto m = static_cast<long long>(n);
  return static_cast<std::size_t>(((static_cast<long long>(n_shift) % m) + m) % m);
}

void require_same_dims(const Plane& plane, const KeystreamPlane& ks,
                       const char* what) {
  if (plane.rows() != ks.bytes.rows() || plane.cols() != ks.bytes.cols()) {
    throw DimensionError(std::string(what) + ": plane and keystream dims differ");
  }
}

// One horizontal pass over every row: X = P ^ K, B[k] = X[perm[k]],
// H[j] = B[j + s] ^ K[j + s] (indices mod N).
Plane forward_pass(const Plane& plane, const Plane& key,
                   const std::vector<Permutation>& perms, std::size_t shift) {
  const std::size_t n = plane.cols();
  Plane out(plane.rows(), n);
  std::vector<std::uint8_t> gathered(n);
  for (std::size_t i = 0; i < plane.rows(); ++i) {
    const auto p = plane.row(i);
    const auto k = key.row(i);
    const Permutation& perm = perms[i];
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t src = perm[j];
      gathered[j] = static_cast<std::uint8_t>(p[src] ^ k[src]);
    }
    auto o = out.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t from = (j + shift) % n;
      o[j] = static_cast<std::uint8_t>(gathered[from] ^ k[from]);
    }
  }
  return out;
}

Plane inverse_pass(const Plane& plane, const Plane& key,
                   const std::vector<Permutation>& perms, std::size_t shift) {
  const std::size_t n = plane.cols();
  Plane out(plane.rows(), n);
  std::vector<std::uint8_t> gathered(n);
  for (std::size_t i = 0; i < plane.rows(); ++i) {
    const auto h = plane.row(i);
    const auto k = key.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t from = (j + shift) % n;
      gathered[from] = static_cast<std::uint8_t>(h[j] ^ k[from]);
    }
    auto o = out.row(i);
    const Permutation& perm = perms[i];
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dst = perm[j];
      o[dst] = static_cast<std::uint8_t>(gathered[j] ^ k[dst]);
    }
  }
  return out;
}

double signum(double v) { return v < 0.0 ? -1.0 : 1.0; }

void require_square_image(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols) {
    throw DimensionError(std::string(what) + ": image must be square, got " +
                         std::to_string(cols) + "x" + std::to_string(rows));
  }
  if (rows < 2) {
    throw DimensionError(std::string(what) + ": image must be at least 2x2");
  }
}

std::array<RoundKeystream, kRounds> build_rounds(const KeyTriple& keys,
                                                 std::size_t n,
                                                 const KeystreamConfig& config) {
  return {build_round_keystream(keys[0], n, config),
          build_round_keystream(keys[1], n, config),
          build_round_keystream(keys[2], n, config)};
}

RealMatrix to_real(const Plane& p) {
  RealMatrix m(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.size(); ++i) m.values()[i] = p.values()[i];
  return m;
}

}  // namespace

Plane round_to_bytes(const RealMatrix& m) {
  Plane out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double v = m.values()[i];
    double r = std::isnan(v) ? 0.0 : std::round(v);
    r = r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r);
    out.values()[i] = static_cast<std::uint8_t>(r);
  }
  return out;
}

Difference make_difference(const Plane& component, const SparseCoeffs& sparse) {
  if (sparse.rows != component.rows() || sparse.cols != component.cols()) {
    throw DimensionError("make_difference: coefficient dims differ from component");
  }
  Difference d;
  d.recon = round_to_bytes(reconstruct_sparse(sparse));
  d.dic = Plane(component.rows(), component.cols());
  for (std::size_t i = 0; i < component.size(); ++i) {
    d.dic.values()[i] =
        static_cast<std::uint8_t>(component.values()[i] - d.recon.values()[i]);
  }
  return d;
}

DifferencePlane shuffle_encrypt(const DifferencePlane& plane,
                                const KeystreamPlane& ks, int n_shift) {
  require_same_dims(plane, ks, "shuffle_encrypt");
  const std::size_t s = wrap_shift(n_shift, plane.cols());
  const Plane h = forward_pass(plane, ks.bytes, ks.row_perm, s);
  return forward_pass(h.transposed(), ks.bytes.transposed(), ks.col_perm, s)
      .transposed();
}

DifferencePlane shuffle_decrypt(const DifferencePlane& plane,
                                const KeystreamPlane& ks, int n_shift) {
  require_same_dims(plane, ks, "shuffle_decrypt");
  const std::size_t s = wrap_shift(n_shift, plane.cols());
  const Plane h =
      inverse_pass(plane.transposed(), ks.bytes.transposed(), ks.col_perm, s)
          .transposed();
  return inverse_pass(h, ks.bytes, ks.row_perm, s);
}

void guard_unit_magnitudes(SparseCoeffs& s) {
  for (auto& e : s.entries) {
    const double mag = std::fabs(e.value);
    if (mag >= 1.0 && mag < kMinCoeffMagnitude) {
      e.value = signum(e.value) * kMinCoeffMagnitude;
    }
  }
}

RealMatrix log_forward(const SparseCoeffs& s, std::size_t n) {
  if (s.rows != n || s.cols != n) {
    throw DimensionError("log_forward: coefficients must be " + std::to_string(n) +
                         "x" + std::to_string(n));
  }
  RealMatrix out(n, n);
  for (const auto& e : s.entries) {
    const double mag = std::fabs(e.value);
    if (!(mag >= 1.0)) {
      throw DomainError("log_forward: coefficient magnitude below 1 cannot be "
                        "sign-log encoded");
    }
    // Row r rotated left by r: column c lands on (c - r) mod n.
    const std::size_t col = (e.col + n - e.row % n) % n;
    out(e.row, col) = signum(e.value) * std::log10(mag);
  }
  return out;
}

SparseCoeffs log_inverse(const RealMatrix& m) {
  SparseCoeffs s;
  s.rows = m.rows();
  s.cols = m.cols();
  const std::size_t n = m.cols();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double v = m(r, c);
      if (v == 0.0) continue;
      const std::size_t col = (c + r) % n;
      s.entries.push_back({r, col, signum(v) * std::pow(10.0, std::fabs(v))});
    }
  }
  sort_by_magnitude(s.entries);
  s.energy_fraction = 1.0;
  return s;
}

CarrierPlane embed_coeffs(const RealMatrix& logm, const RealMatrix& base) {
  if (logm.rows() != base.rows() || logm.cols() != base.cols()) {
    throw DimensionError("embed_coeffs: dims differ");
  }
  CarrierPlane out(base.rows(), base.cols());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.values()[i] = base.values()[i] + logm.values()[i];
  }
  return out;
}

CarrierPlane embed_coeffs(const RealMatrix& logm, const KeystreamPlane& ks) {
  return embed_coeffs(logm, ks.real_twin);
}

RealMatrix extract_coeffs(const CarrierPlane& carrier, const RealMatrix& base) {
  if (carrier.rows() != base.rows() || carrier.cols() != base.cols()) {
    throw DimensionError("extract_coeffs: dims differ");
  }
  RealMatrix out(base.rows(), base.cols());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.values()[i] = carrier.values()[i] - base.values()[i];
  }
  return out;
}

RealMatrix extract_coeffs(const CarrierPlane& carrier, const KeystreamPlane& ks) {
  return extract_coeffs(carrier, ks.real_twin);
}

RealMatrix keystream_sum(std::span<const RoundKeystream> rounds,
                         std::size_t component) {
  if (rounds.empty()) return {};
  const RealMatrix& first = rounds[0].for_component(component).real_twin;
  RealMatrix sum(first.rows(), first.cols());
  for (const auto& round : rounds) {
    const RealMatrix& twin = round.for_component(component).real_twin;
    for (std::size_t i = 0; i < sum.size(); ++i) sum.values()[i] += twin.values()[i];
  }
  return sum;
}

CipherBundle encrypt_image(const ImageRGB& img, const KeyTriple& keys,
                           std::array<int, 3> shifts,
                           const KeystreamConfig& config) {
  require_square_image(img.height(), img.width(), "encrypt_image");
  for (const auto& p : img.planes) {
    if (p.rows() != img.height() || p.cols() != img.width()) {
      throw DimensionError("encrypt_image: component planes differ in size");
    }
  }
  const std::size_t n = img.width();
  const auto rounds = build_rounds(keys, n, config);

  CipherBundle bundle;
  bundle.width = static_cast<std::uint32_t>(n);
  bundle.height = static_cast<std::uint32_t>(n);
  for (std::size_t k = 0; k < kRounds; ++k) {
    if (shifts[k] < 0 || shifts[k] > 0xFFFF) {
      throw DomainError("encrypt_image: shift counts must fit in 16 bits");
    }
    bundle.shifts[k] = static_cast<std::uint16_t>(shifts[k]);
    for (std::size_t r = 0; r < 3; ++r) {
      bundle.rotations[k][r] = static_cast<std::uint8_t>(keys[k].rotations()[r]);
    }
  }

  for (std::size_t c = 0; c < 3; ++c) {
    SparseCoeffs coeffs = energy_select(dct2(to_real(img.planes[c])),
                                        config.energy_fraction);
    guard_unit_magnitudes(coeffs);

    DifferencePlane dic = make_difference(img.planes[c], coeffs).dic;
    for (std::size_t k = 0; k < kRounds; ++k) {
      dic = shuffle_encrypt(dic, rounds[k].for_component(c), shifts[k]);
    }
    bundle.dic[c] = std::move(dic);
    bundle.carriers[c] =
        embed_coeffs(log_forward(coeffs, n), keystream_sum(rounds, c));
  }
  return bundle;
}

ImageRGB decrypt_image(const CipherBundle& bundle, const KeyTriple& keys,
                       const KeystreamConfig& config) {
  require_square_image(bundle.height, bundle.width, "decrypt_image");
  const std::size_t n = bundle.width;
  for (std::size_t c = 0; c < 3; ++c) {
    if (bundle.dic[c].rows() != n || bundle.dic[c].cols() != n ||
        bundle.carriers[c].rows() != n || bundle.carriers[c].cols() != n) {
      throw DimensionError("decrypt_image: payload dims differ from header");
    }
  }
  const auto rounds = build_rounds(keys, n, config);

  ImageRGB img;
  for (std::size_t c = 0; c < 3; ++c) {
    DifferencePlane dic = bundle.dic[c];
    for (std::size_t k = kRounds; k-- > 0;) {
      dic = shuffle_decrypt(dic, rounds[k].for_component(c), bundle.shifts[k]);
    }
    const SparseCoeffs coeffs =
        log_inverse(extract_coeffs(bundle.carriers[c], keystream_sum(rounds, c)));
    const Plane recon = round_to_bytes(reconstruct_sparse(coeffs));

    Plane out(n, n);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out.values()[i] =
          static_cast<std::uint8_t>(recon.values()[i] + dic.values()[i]);
    }
    img.planes[c] = std::move(out);
  }
  return img;
}

}  // namespace ldct
