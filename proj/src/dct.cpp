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

#include "ldct/dct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

#include "fft.hpp"
#include "ldct/error.hpp"

namespace ldct {

namespace {

using detail::Complex;

double scale(std::size_t k, std::size_t len) {
  return std::sqrt((k == 0 ? 1.0 : 2.0) / static_cast<double>(len));
}

// basis(k, n) = s(k) cos(pi k (2n+1) / 2N). The argument is reduced modulo
// 4N in integers before scaling so large k*n products stay accurate.
RealMatrix basis(std::size_t n) {
  RealMatrix b(n, n);
  const std::uint64_t period = 4 * static_cast<std::uint64_t>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = scale(k, n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t m = (static_cast<std::uint64_t>(k) * (2 * i + 1)) % period;
      const double ang = std::numbers::pi * static_cast<double>(m) /
                         (2.0 * static_cast<double>(n));
      b(k, i) = s * std::cos(ang);
    }
  }
  return b;
}

// out = a * b
RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto orow = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

}  // namespace

RealMatrix dct2(const RealMatrix& f) {
  if (f.empty()) return f;
  const RealMatrix br = basis(f.rows());
  const RealMatrix bc = basis(f.cols());
  // F = Br f Bc^T
  return multiply(br, multiply(f, bc.transposed()));
}

RealMatrix idct2(const RealMatrix& coeffs) {
  if (coeffs.empty()) return coeffs;
  const RealMatrix br = basis(coeffs.rows());
  const RealMatrix bc = basis(coeffs.cols());
  // f = Br^T F Bc
  return multiply(br.transposed(), multiply(coeffs, bc));
}

// Makhoul's reordering turns the DCT-II into one length-L complex DFT:
// v = (x0, x2, x4, ..., x5, x3, x1), X[k] = Re(exp(-i pi k / 2L) V[k]).
std::vector<double> dct1(std::span<const double> x) {
  const std::size_t len = x.size();
  if (len == 0) return {};
  std::vector<Complex> v(len);
  for (std::size_t n = 0; 2 * n < len; ++n) v[n] = x[2 * n];
  for (std::size_t n = 0; 2 * n + 1 < len; ++n) v[len - 1 - n] = x[2 * n + 1];

  const std::vector<Complex> spectrum = detail::dft(std::move(v), false);
  std::vector<double> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    const double ang = -std::numbers::pi * static_cast<double>(k) /
                       (2.0 * static_cast<double>(len));
    const Complex w{std::cos(ang), std::sin(ang)};
    out[k] = scale(k, len) * (w * spectrum[k]).real();
  }
  return out;
}

// Inverse of the above: V[k] = exp(i pi k / 2L) (y[k] - i y[L-k]), y[L] = 0.
std::vector<double> idct1(std::span<const double> coeffs) {
  const std::size_t len = coeffs.size();
  if (len == 0) return {};
  std::vector<double> y(len);
  for (std::size_t k = 0; k < len; ++k) y[k] = coeffs[k] / scale(k, len);

  std::vector<Complex> spectrum(len);
  for (std::size_t k = 0; k < len; ++k) {
    const double ang = std::numbers::pi * static_cast<double>(k) /
                       (2.0 * static_cast<double>(len));
    const Complex w{std::cos(ang), std::sin(ang)};
    const double tail = k == 0 ? 0.0 : y[len - k];
    spectrum[k] = w * Complex{y[k], -tail};
  }
  const std::vector<Complex> v = detail::dft(std::move(spectrum), true);

  std::vector<double> out(len);
  for (std::size_t n = 0; 2 * n < len; ++n) out[2 * n] = v[n].real();
  for (std::size_t n = 0; 2 * n + 1 < len; ++n) out[2 * n + 1] = v[len - 1 - n].real();
  return out;
}

void sort_by_magnitude(std::vector<SparseEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SparseEntry& a, const SparseEntry& b) {
                     const double ma = std::fabs(a.value);
                     const double mb = std::fabs(b.value);
                     if (ma != mb) return ma > mb;
                     if (a.row != b.row) return a.row < b.row;
                     return a.col < b.col;
                   });
}

SparseCoeffs energy_select(const RealMatrix& coeffs, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw DomainError("energy_select: fraction must lie in (0, 1]");
  }
  SparseCoeffs out;
  out.rows = coeffs.rows();
  out.cols = coeffs.cols();

  const auto vals = coeffs.values();
  double total = 0.0;
  for (double v : vals) total += v * v;
  if (total == 0.0) {
    out.energy_fraction = 1.0;
    return out;
  }

  std::vector<std::size_t> order(vals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(vals[a]) > std::fabs(vals[b]);
  });

  const double target = fraction * total;
  double cumulative = 0.0;
  double kept = 0.0;
  for (std::size_t idx : order) {
    if (cumulative >= target) break;
    const double v = vals[idx];
    cumulative += v * v;
    if (std::fabs(v) < 1.0) continue;
    kept += v * v;
    out.entries.push_back({idx / coeffs.cols(), idx % coeffs.cols(), v});
  }
  out.energy_fraction = kept / total;
  return out;
}

SparseCoeffs energy_select(std::span<const double> coeffs, double fraction) {
  RealMatrix m(1, coeffs.size(),
               std::vector<double>(coeffs.begin(), coeffs.end()));
  return energy_select(m, fraction);
}

RealMatrix to_dense(const SparseCoeffs& s) {
  RealMatrix m(s.rows, s.cols);
  for (const auto& e : s.entries) m(e.row, e.col) = e.value;
  return m;
}

RealMatrix reconstruct_sparse(const SparseCoeffs& s) { return idct2(to_dense(s)); }

}  // namespace ldct
