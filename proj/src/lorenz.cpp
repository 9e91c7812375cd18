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

#include "ldct/lorenz.hpp"

#include <cmath>

#include "ldct/error.hpp"

namespace ldct {

namespace {

constexpr std::uint64_t kMask48 = (std::uint64_t{1} << 48) - 1;
constexpr double kTwoPow48 = 281474976710656.0;

double round14(double v) { return std::round(v * 1e14) / 1e14; }

bool finite(const State3& s) {
  return std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.z);
}

State3 axpy(const State3& s, double h, const State3& k) {
  return {s.x + h * k.x, s.y + h * k.y, s.z + h * k.z};
}

}  // namespace

SecretKey::SecretKey(std::string_view chars, std::array<int, 3> rotations)
    : chars_(chars) {
  if (chars_.size() != kKeyLength) {
    throw InvalidKeyError("key must be exactly 6 characters, got " +
                          std::to_string(chars_.size()));
  }
  for (char ch : chars_) {
    const auto code = static_cast<unsigned char>(ch);
    if (code < 32 || code > 126) {
      throw InvalidKeyError("key contains non-printable character code " +
                            std::to_string(code));
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    if (rotations[k] < 0) {
      throw InvalidKeyError("rotation counts must be non-negative");
    }
    rotations_[k] = rotations[k] % 48;
  }
}

std::uint64_t SecretKey::packed() const {
  std::uint64_t u = 0;
  for (char ch : chars_) u = (u << 8) | static_cast<unsigned char>(ch);
  return u;
}

std::uint64_t rotl48(std::uint64_t value, unsigned count) {
  value &= kMask48;
  count %= 48;
  if (count == 0) return value;
  return ((value << count) | (value >> (48 - count))) & kMask48;
}

State3 derive_initial_conditions(const SecretKey& key) {
  const std::uint64_t u = key.packed();
  std::array<double, 3> v{};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto rotated = rotl48(u, static_cast<unsigned>(key.rotations()[k]));
    v[k] = round14(0.1 + 0.8 * (static_cast<double>(rotated) / kTwoPow48));
  }
  return {v[0], v[1], v[2]};
}

State3 lorenz_derivative(const State3& s, const LorenzParams& p) {
  return {p.sigma * (s.y - s.x), s.x * (p.rho - s.z) - s.y,
          s.x * s.y - p.beta * s.z};
}

std::size_t sample_count(double t_start, double t_end, double dt) {
  const double steps = (t_end - t_start) / dt;
  return static_cast<std::size_t>(std::floor(steps * (1.0 + 1e-9))) + 1;
}

Trajectory integrate(const LorenzParams& p, const State3& s0, double t_start,
                     double t_end, double dt) {
  if (!(t_end > t_start) || !(dt > 0.0)) {
    throw DomainError("integrate: need t_end > t_start and dt > 0");
  }
  if (!(p.rho > 0.0 && p.sigma > 0.0 && p.beta > 0.0)) {
    throw DomainError("integrate: Lorenz parameters must be positive");
  }
  if (!finite(s0)) throw DivergenceError("integrate: non-finite initial state");

  const std::size_t n = sample_count(t_start, t_end, dt);
  Trajectory traj;
  traj.t.resize(n);
  traj.x.resize(n);
  traj.y.resize(n);
  traj.z.resize(n);

  const double half = 0.5 * dt;
  const double sixth = dt / 6.0;
  State3 s = s0;
  for (std::size_t i = 0; i < n; ++i) {
    traj.t[i] = t_start + static_cast<double>(i) * dt;
    traj.x[i] = s.x;
    traj.y[i] = s.y;
    traj.z[i] = s.z;
    if (i + 1 == n) break;

    const State3 k1 = lorenz_derivative(s, p);
    const State3 k2 = lorenz_derivative(axpy(s, half, k1), p);
    const State3 k3 = lorenz_derivative(axpy(s, half, k2), p);
    const State3 k4 = lorenz_derivative(axpy(s, dt, k3), p);
    s.x = s.x + sixth * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    s.y = s.y + sixth * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
    s.z = s.z + sixth * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
    if (!finite(s)) {
      throw DivergenceError("integrate: state became non-finite at t = " +
                            std::to_string(traj.t[i] + dt));
    }
  }
  return traj;
}

std::pair<State3, State3> equilibria(const LorenzParams& p) {
  if (p.rho < 1.0) {
    throw DomainError("equilibria: rho < 1 has no real non-trivial equilibria");
  }
  const double r = std::sqrt(p.beta * (p.rho - 1.0));
  return {State3{r, r, p.rho - 1.0}, State3{-r, -r, p.rho - 1.0}};
}

bool is_chaotic_regime(const LorenzParams& p) {
  const double denom = p.sigma - p.beta - 1.0;
  if (!(p.rho > 1.0) || !(denom > 0.0)) return false;
  return p.rho > p.sigma * (p.sigma + p.beta + 3.0) / denom;
}

}  // namespace ldct
