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

// Key schedule and fixed-step integration of the Lorenz system
//
//   dx/dt = sigma (y - x)
//   dy/dt = x (rho - z) - y
//   dz/dt = x y - beta z
//
// Everything here uses only +, -, * and / on doubles in a fixed order (plus
// sqrt for the equilibria), so trajectories are bit-identical on any
// IEEE-754 platform as long as the compiler does not contract into FMA.

#ifndef LDCT_LORENZ_HPP_
#define LDCT_LORENZ_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ldct {

struct LorenzParams {
  double rho = 28.0;
  double sigma = 10.0;
  double beta = 8.0 / 3.0;
};

struct State3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const State3&, const State3&) = default;
};

inline constexpr std::array<int, 3> kDefaultRotations = {5, 11, 17};
inline constexpr std::size_t kKeyLength = 6;

// Six printable ASCII characters plus the three cyclic rotation counts used to
// derive (x0, y0, z0). Rotations are stored reduced modulo 48.
class SecretKey {
 public:
  explicit SecretKey(std::string_view chars,
                     std::array<int, 3> rotations = kDefaultRotations);

  const std::string& chars() const { return chars_; }
  const std::array<int, 3>& rotations() const { return rotations_; }

  // The six character codes as one 48-bit integer, first character most
  // significant.
  std::uint64_t packed() const;

  friend bool operator==(const SecretKey&, const SecretKey&) = default;

 private:
  std::string chars_;
  std::array<int, 3> rotations_;
};

// Cyclic left rotation within 48 bits. Any non-negative count is accepted;
// 48 is the identity.
std::uint64_t rotl48(std::uint64_t value, unsigned count);

// Maps each rotated 48-bit word u to 0.1 + 0.8 u / 2^48, rounded to 14
// decimal places. The result always lies in [0.1, 0.9].
State3 derive_initial_conditions(const SecretKey& key);

State3 lorenz_derivative(const State3& s, const LorenzParams& p);

struct Trajectory {
  std::vector<double> t;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;

  std::size_t size() const { return t.size(); }
  State3 at(std::size_t i) const { return {x[i], y[i], z[i]}; }
};

// Number of samples floor((t_end - t_start) / dt) + 1. A relative slack of
// 1e-9 absorbs quotients such as 50 / 0.001 landing a hair below an integer.
std::size_t sample_count(double t_start, double t_end, double dt);

// Classical RK4 with fixed step dt, sampled at t_start + i dt.
// Throws DivergenceError on a non-finite state, DomainError on a bad window.
Trajectory integrate(const LorenzParams& p, const State3& s0, double t_start,
                     double t_end, double dt);

// The two non-trivial fixed points (+sqrt(beta(rho-1)), +.., rho-1) and
// (-.., -.., rho-1). Throws DomainError for rho < 1.
std::pair<State3, State3> equilibria(const LorenzParams& p);

bool is_chaotic_regime(const LorenzParams& p);

}  // namespace ldct

#endif  // LDCT_LORENZ_HPP_
