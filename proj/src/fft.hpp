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

// Internal complex DFT used by the 1D DCT. Power-of-two lengths go through an
// iterative radix-2 transform; other lengths use Bluestein's chirp-z
// reformulation on top of it. Deterministic: no planning, no runtime dispatch.

#ifndef LDCT_SRC_FFT_HPP_
#define LDCT_SRC_FFT_HPP_

#include <complex>
#include <vector>

namespace ldct::detail {

using Complex = std::complex<double>;

// Unnormalized forward transform X_k = sum_n x_n exp(-2 pi i n k / L), or the
// inverse (positive exponent) scaled by 1 / L.
std::vector<Complex> dft(std::vector<Complex> x, bool inverse);

}  // namespace ldct::detail

#endif  // LDCT_SRC_FFT_HPP_
