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

#include "fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace ldct::detail {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// In-place radix-2, no scaling. Twiddles are evaluated directly per index
// rather than by recurrence to keep the error flat across the table.
void radix2(std::vector<Complex>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<Complex> tw(n / 2);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(n);
    tw[k] = {std::cos(ang), sign * std::sin(ang)};
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = a[start + k];
        const Complex v = a[start + k + half] * tw[k * stride];
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
}

// exp(-+ i pi n^2 / L) with n^2 reduced modulo 2L in integers.
std::vector<Complex> chirp(std::size_t len, bool inverse) {
  std::vector<Complex> w(len);
  const std::uint64_t period = 2 * static_cast<std::uint64_t>(len);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t n = 0; n < len; ++n) {
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    const std::uint64_t r = (nn * nn) % period;
    const double ang =
        std::numbers::pi * static_cast<double>(r) / static_cast<double>(len);
    w[n] = {std::cos(ang), sign * std::sin(ang)};
  }
  return w;
}

std::vector<Complex> bluestein(const std::vector<Complex>& x, bool inverse) {
  const std::size_t len = x.size();
  const std::size_t m = next_pow2(2 * len - 1);
  const std::vector<Complex> w = chirp(len, inverse);

  std::vector<Complex> a(m, Complex{});
  std::vector<Complex> b(m, Complex{});
  for (std::size_t n = 0; n < len; ++n) a[n] = x[n] * w[n];
  b[0] = std::conj(w[0]);
  for (std::size_t n = 1; n < len; ++n) {
    b[n] = std::conj(w[n]);
    b[m - n] = b[n];
  }

  radix2(a, false);
  radix2(b, false);
  for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
  radix2(a, true);

  const double inv_m = 1.0 / static_cast<double>(m);
  std::vector<Complex> out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = w[k] * (a[k] * inv_m);
  return out;
}

}  // namespace

std::vector<Complex> dft(std::vector<Complex> x, bool inverse) {
  const std::size_t len = x.size();
  if (len <= 1) return x;
  if (is_pow2(len)) {
    radix2(x, inverse);
  } else {
    x = bluestein(x, inverse);
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(len);
    for (auto& v : x) v *= inv;
  }
  return x;
}

}  // namespace ldct::detail
