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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "ldct/error.hpp"
#include "ldct/lorenz.hpp"

using namespace ldct;

namespace {

// Straight RK4 on a plain array, written independently of the library.
std::array<double, 3> rk4_ref(std::array<double, 3> s, double dt, int steps) {
  const double r = 28.0, sg = 10.0, b = 8.0 / 3.0;
  auto f = [&](const std::array<double, 3>& v) {
    return std::array<double, 3>{sg * (v[1] - v[0]), v[0] * (r - v[2]) - v[1],
                                 v[0] * v[1] - b * v[2]};
  };
  for (int n = 0; n < steps; ++n) {
    std::array<double, 3> k1 = f(s), t{}, k2{}, k3{}, k4{};
    for (int i = 0; i < 3; ++i) t[i] = s[i] + 0.5 * dt * k1[i];
    k2 = f(t);
    for (int i = 0; i < 3; ++i) t[i] = s[i] + 0.5 * dt * k2[i];
    k3 = f(t);
    for (int i = 0; i < 3; ++i) t[i] = s[i] + dt * k3[i];
    k4 = f(t);
    for (int i = 0; i < 3; ++i) s[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return s;
}

}  // namespace

TEST_CASE("secret key validation") {
  CHECK_NOTHROW(SecretKey("Secret"));
  CHECK_NOTHROW(SecretKey("      "));
  CHECK_NOTHROW(SecretKey("~~~~~~"));
  CHECK_THROWS_AS(SecretKey("short"), InvalidKeyError);
  CHECK_THROWS_AS(SecretKey("toolong"), InvalidKeyError);
  CHECK_THROWS_AS(SecretKey(std::string("ab\x01" "def")), InvalidKeyError);
  CHECK_THROWS_AS(SecretKey(std::string("abc\x7f" "ef")), InvalidKeyError);
  CHECK_THROWS_AS(SecretKey("abcdef", {-1, 0, 0}), InvalidKeyError);
  CHECK(SecretKey("abcdef", {48, 49, 96}).rotations() == std::array<int, 3>{0, 1, 0});
  CHECK(SecretKey("      ").packed() == 0x202020202020ull);
}

TEST_CASE("rotl48") {
  CHECK(rotl48(0x800000000000ull, 1) == 1);
  CHECK(rotl48(0x123456789ABCull, 0) == 0x123456789ABCull);
  CHECK(rotl48(0x123456789ABCull, 48) == 0x123456789ABCull);
  CHECK(rotl48(0x123456789ABCull, 8) == 0x3456789ABC12ull);
  CHECK(rotl48(0x123456789ABCull, 4) == 0x23456789ABC1ull);
}

TEST_CASE("initial conditions, frozen values") {
  // Hand-evaluated with exact integer arithmetic, then rounded to 14 places.
  const State3 sp = derive_initial_conditions(SecretKey("      ", {0, 0, 0}));
  CHECK(sp.x == 0.20039215686274);
  CHECK(sp.y == 0.20039215686274);
  CHECK(sp.z == 0.20039215686274);

  const State3 s = derive_initial_conditions(SecretKey("Secret", {5, 11, 17}));
  CHECK(s.x == 0.43960486886684);
  CHECK(s.y == 0.23471160747766);
  CHECK(s.z == 0.72154287857032);

  const State3 a = derive_initial_conditions(SecretKey("AAAAAA", {0, 8, 16}));
  CHECK(a.x == 0.30392156862745);
  CHECK(a.y == a.x);
  CHECK(a.z == a.x);

  const State3 t = derive_initial_conditions(SecretKey("~~~~~~", {1, 2, 3}));
  CHECK(t.x == 0.89058823529411);
  CHECK(t.y == 0.88117647058823);
  CHECK(t.z == 0.86235294117647);
}

TEST_CASE("rotation 48 behaves like 0 and outputs stay in range") {
  for (const char* k : {"Secret", "Lorenz", "a1b2c3", "~ ~ ~ "}) {
    CHECK(derive_initial_conditions(SecretKey(k, {48, 48, 48})) ==
          derive_initial_conditions(SecretKey(k, {0, 0, 0})));
    const State3 s = derive_initial_conditions(SecretKey(k));
    for (double v : {s.x, s.y, s.z}) {
      CHECK(v >= 0.1);
      CHECK(v <= 0.9);
    }
  }
}

TEST_CASE("derivative") {
  const LorenzParams p;
  CHECK(lorenz_derivative({0, 0, 0}, p) == State3{0, 0, 0});
  const State3 d = lorenz_derivative({1, 1, 1}, p);
  CHECK(d.x == 0.0);
  CHECK(d.y == 26.0);
  CHECK(d.z == doctest::Approx(-5.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("sample count") {
  CHECK(sample_count(0, 50, 0.001) == 50001);
  CHECK(sample_count(0, 1, 0.1) == 11);
  CHECK(sample_count(0, 1, 0.3) == 4);
  CHECK(sample_count(2, 2, 0.01) == 1);
}

TEST_CASE("integrate: window, origin, errors") {
  const LorenzParams p;
  const Trajectory tr = integrate(p, {0, 0, 0}, 0, 50, 0.001);
  REQUIRE(tr.size() == 50001);
  CHECK(tr.t.front() == 0.0);
  CHECK(tr.t.back() == doctest::Approx(50.0));
  for (std::size_t i = 1; i < tr.size(); ++i) REQUIRE(tr.t[i] > tr.t[i - 1]);
  CHECK(std::all_of(tr.x.begin(), tr.x.end(), [](double v) { return v == 0.0; }));
  CHECK(std::all_of(tr.z.begin(), tr.z.end(), [](double v) { return v == 0.0; }));

  CHECK_THROWS_AS(integrate(p, {1, 1, 1}, 0, 1, 0.0), DomainError);
  CHECK_THROWS_AS(integrate(p, {1, 1, 1}, 1, 0, 0.01), DomainError);
  CHECK_THROWS_AS(integrate(p, {1e200, 1e200, 1e200}, 0, 1, 0.01), DivergenceError);
  CHECK_THROWS_AS(integrate(p, {std::numeric_limits<double>::quiet_NaN(), 0, 0}, 0, 1, 0.01),
                  DivergenceError);
}

TEST_CASE("integrate matches an independent RK4") {
  const Trajectory tr = integrate({}, {0.5, 0.3, 0.7}, 0, 2, 0.001);
  const auto ref = rk4_ref({0.5, 0.3, 0.7}, 0.001, 2000);
  CHECK(tr.x.back() == doctest::Approx(ref[0]).epsilon(1e-11));
  CHECK(tr.y.back() == doctest::Approx(ref[1]).epsilon(1e-11));
  CHECK(tr.z.back() == doctest::Approx(ref[2]).epsilon(1e-11));
}

TEST_CASE("integrate is fourth order") {
  // Short horizon, before chaos amplifies round-off.
  auto end = [](double dt) { return integrate({}, {1, 1, 1}, 0, 0.5, dt).at(
                                 sample_count(0, 0.5, dt) - 1); };
  const State3 fine = end(1e-4);
  const State3 a = end(0.004), b = end(0.002);
  const double ea = std::fabs(a.x - fine.x) + std::fabs(a.y - fine.y) + std::fabs(a.z - fine.z);
  const double eb = std::fabs(b.x - fine.x) + std::fabs(b.y - fine.y) + std::fabs(b.z - fine.z);
  CHECK(ea / eb > 12.0);
  CHECK(ea / eb < 20.0);
}

TEST_CASE("attractor bounds") {
  const Trajectory tr = integrate({}, {2, 1, 1.05}, 0, 50, 0.001);
  double mx = 0, mz = 0;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    mx = std::max(mx, std::fabs(tr.x[i]));
    mz = std::max(mz, std::fabs(tr.z[i]));
  }
  CHECK(mx <= 25.0);
  CHECK(mz <= 55.0);
  // Still moving at the end: no convergence to a fixed point.
  const std::size_t n = tr.size();
  double lo = tr.x[n - 2000], hi = lo;
  for (std::size_t i = n - 2000; i < n; ++i) {
    lo = std::min(lo, tr.x[i]);
    hi = std::max(hi, tr.x[i]);
  }
  CHECK(hi - lo > 5.0);
}

TEST_CASE("same initial state, bit-identical trajectory") {
  const Trajectory a = integrate({}, {0.43960486886684, 0.23471160747766, 0.72154287857032}, 0,
                                 50, 0.001);
  const Trajectory b = integrate({}, {0.43960486886684, 0.23471160747766, 0.72154287857032}, 0,
                                 50, 0.001);
  CHECK(a.x == b.x);
  CHECK(a.y == b.y);
  CHECK(a.z == b.z);
}

TEST_CASE("equilibria") {
  const LorenzParams p;
  const auto [a, b] = equilibria(p);
  const double r72 = 8.48528137423857;
  CHECK(a.x == doctest::Approx(r72).epsilon(1e-14));
  CHECK(std::fabs(a.x - std::sqrt(72.0)) <= 1e-12);
  CHECK(std::fabs(a.y - std::sqrt(72.0)) <= 1e-12);
  CHECK(std::fabs(a.z - 27.0) <= 1e-12);
  CHECK(std::fabs(b.x + std::sqrt(72.0)) <= 1e-12);
  CHECK(std::fabs(b.y + std::sqrt(72.0)) <= 1e-12);
  CHECK(std::fabs(b.z - 27.0) <= 1e-12);
  for (const State3& e : {a, b}) {
    const State3 d = lorenz_derivative(e, p);
    CHECK(std::fabs(d.x) <= 1e-12);
    CHECK(std::fabs(d.y) <= 1e-12);
    CHECK(std::fabs(d.z) <= 1e-12);
  }

  LorenzParams one;
  one.rho = 1.0;
  const auto [c, d] = equilibria(one);
  CHECK(c == State3{0, 0, 0});
  CHECK(d == State3{0, 0, 0});

  LorenzParams low;
  low.rho = 0.5;
  CHECK_THROWS_AS(equilibria(low), DomainError);
}

TEST_CASE("chaotic regime classifier") {
  LorenzParams p;
  CHECK(is_chaotic_regime(p));
  // threshold sigma (sigma + beta + 3) / (sigma - beta - 1) = 470/19
  p.rho = 470.0 / 19.0 - 1e-9;
  CHECK_FALSE(is_chaotic_regime(p));
  p.rho = 470.0 / 19.0 + 1e-9;
  CHECK(is_chaotic_regime(p));
  p.rho = 0.5;
  CHECK_FALSE(is_chaotic_regime(p));
  LorenzParams q;
  q.sigma = q.beta + 0.5;
  CHECK_FALSE(is_chaotic_regime(q));
}
