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
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "ldct/analysis.hpp"
#include "ldct/cipher.hpp"
#include "ldct/error.hpp"
#include "ldct/image_io.hpp"
#include "ldct/report.hpp"
#include "test_util.hpp"

using namespace ldct;

TEST_CASE("histogram") {
  const Histogram h = histogram(Plane(4, 4, 7));
  CHECK(h[7] == 16);
  CHECK(std::accumulate(h.begin(), h.end(), std::uint64_t{0}) == 16);

  Plane ramp(16, 16);
  for (std::size_t i = 0; i < 256; ++i) ramp.values()[i] = static_cast<std::uint8_t>(i);
  const Histogram r = histogram(ramp);
  CHECK(std::all_of(r.begin(), r.end(), [](std::uint64_t v) { return v == 1; }));
  CHECK(entropy(ramp) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(entropy(Plane(9, 9, 200)) == 0.0);
}

TEST_CASE("adjacent correlation") {
  Plane rows(8, 8);
  for (std::size_t c = 0; c < 8; ++c)
    for (std::size_t r = 0; r < 8; ++r) rows(r, c) = static_cast<std::uint8_t>(c * 30);
  CHECK(adjacent_correlation(rows, Direction::kVertical) == doctest::Approx(1.0));

  Plane checker(8, 8);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) checker(r, c) = (r + c) % 2 ? 255 : 0;
  CHECK(adjacent_correlation(checker, Direction::kHorizontal) == doctest::Approx(-1.0));
  CHECK(adjacent_correlation(checker, Direction::kVertical) == doctest::Approx(-1.0));
  CHECK(adjacent_correlation(checker, Direction::kDiagonal) == doctest::Approx(1.0));

  CHECK_THROWS_AS(adjacent_correlation(Plane(8, 8, 3), Direction::kHorizontal), DomainError);
  CHECK_THROWS_AS(adjacent_correlation(Plane(1, 8, 3), Direction::kVertical), DimensionError);

  // Brute-force Pearson over the explicit pair lists.
  std::mt19937_64 rng(41);
  const Plane p = test::random_plane(20, 20, rng);
  std::vector<double> a, b;
  for (std::size_t r = 0; r < 20; ++r)
    for (std::size_t c = 0; c + 1 < 20; ++c) {
      a.push_back(p(r, c));
      b.push_back(p(r, c + 1));
    }
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  CHECK(adjacent_correlation(p, Direction::kHorizontal) ==
        doctest::Approx(sab / std::sqrt(saa * sbb)).epsilon(1e-12));
}

TEST_CASE("natural image correlation is high") {
  const ImageRGB img = load_ppm(test::data_path("astronaut.ppm"));
  const double r = adjacent_correlation(img.planes[0], Direction::kHorizontal);
  CHECK(r >= 0.93);
  CHECK(r <= 0.995);
}

TEST_CASE("npcr, uaci, mae") {
  std::mt19937_64 rng(42);
  const Plane p = test::random_plane(16, 16, rng);
  CHECK(npcr(p, p) == 0.0);
  CHECK(uaci(p, p) == 0.0);
  CHECK(mae(p, p) == 0.0);

  const Plane zero(8, 8, 0), full(8, 8, 255);
  CHECK(npcr(zero, full) == 100.0);
  CHECK(uaci(zero, full) == doctest::Approx(100.0));
  CHECK(mae(zero, full) == 255.0);

  for (int rep = 0; rep < 10; ++rep) {
    const Plane a = test::random_plane(32, 32, rng), b = test::random_plane(32, 32, rng);
    CHECK(std::fabs(uaci(a, b) - mae(a, b) / 255.0 * 100.0) <= 1e-9);
  }
  CHECK_THROWS_AS(npcr(zero, Plane(4, 4)), DimensionError);
}

TEST_CASE("mse and psnr") {
  std::mt19937_64 rng(43);
  const Plane f = test::random_plane(16, 16, rng);
  CHECK(mse(f, f) == 0.0);
  CHECK(std::isinf(psnr(f, f)));

  // g = f + 1 everywhere with a 255 peak
  Plane lo(4, 4), hi(4, 4);
  for (std::size_t i = 0; i < 16; ++i) {
    lo.values()[i] = static_cast<std::uint8_t>(200 + 3 * i);
    hi.values()[i] = static_cast<std::uint8_t>(201 + 3 * i);
  }
  REQUIRE(hi.values()[15] == 246);
  hi.values()[15] = 255;
  lo.values()[15] = 254;
  CHECK(mse(hi, lo) == 1.0);
  CHECK(psnr(hi, lo) == doctest::Approx(20.0 * std::log10(255.0)).epsilon(1e-12));
  CHECK(psnr(hi, lo) == doctest::Approx(48.1308).epsilon(1e-5));
  // peak comes from the first argument
  CHECK(psnr(lo, hi) == doctest::Approx(20.0 * std::log10(254.0)).epsilon(1e-12));
}

TEST_CASE("scatter sampling") {
  std::mt19937_64 rng(44);
  const Plane p = test::random_plane(10, 10, rng);

  const ScatterSample all = scatter_sample(p, Direction::kHorizontal, 90);
  REQUIRE(all.pairs.size() == 90);
  std::size_t k = 0;
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t c = 0; c + 1 < 10; ++c, ++k) {
      CHECK(all.pairs[k].first == p(r, c));
      CHECK(all.pairs[k].second == p(r, c + 1));
    }

  const ScatterSample s1 = scatter_sample(p, Direction::kDiagonal, 30, 7);
  const ScatterSample s2 = scatter_sample(p, Direction::kDiagonal, 30, 7);
  CHECK(s1.pairs == s2.pairs);
  CHECK(s1.seed == 7);
  CHECK(scatter_sample(p, Direction::kDiagonal, 30, 8).pairs != s1.pairs);

  for (const auto& [v, w] : scatter_sample(Plane(6, 6, 9), Direction::kVertical, 12).pairs) {
    CHECK(v == 9);
    CHECK(w == 9);
  }
  CHECK_THROWS_AS(scatter_sample(p, Direction::kVertical, 91), DomainError);
}

TEST_CASE("report structure and JSON schema") {
  std::mt19937_64 rng(45);
  ImageRGB a, b;
  for (std::size_t c = 0; c < 3; ++c) {
    a.planes[c] = test::random_plane(8, 8, rng);
    b.planes[c] = test::random_plane(8, 8, rng);
  }
  const AnalysisReport rep = full_report("demo", a, b, a);
  CHECK(rep.width == 8);
  REQUIRE(rep.components.size() == 9);
  CHECK(rep.components[0].name == "original/R");
  CHECK(rep.components[4].name == "encrypted/G");
  CHECK(rep.components[8].name == "decrypted/B");
  REQUIRE(rep.pairs.size() == 6);
  CHECK(rep.pairs[0].a == "original/R");
  CHECK(rep.pairs[0].b == "encrypted/R");
  CHECK(std::isinf(rep.pairs[3].psnr));

  const auto j = to_json(rep);
  CHECK(j["image"] == "demo");
  CHECK(j["dims"]["width"] == 8);
  CHECK(j["dims"]["height"] == 8);
  CHECK(j["components"].size() == 9);
  CHECK(j["components"][0]["histogram"].size() == 256);
  CHECK(j["components"][0]["correlation"].contains("h"));
  CHECK(j["components"][0]["correlation"].contains("v"));
  CHECK(j["components"][0]["correlation"].contains("d"));
  CHECK(j["pairs"][3]["psnr"] == "inf");
  CHECK(j["pairs"][0]["psnr"].is_number());
  for (const char* key : {"a", "b", "npcr", "uaci", "mae", "mse", "psnr"})
    CHECK(j["pairs"][0].contains(key));

  const AnalysisReport solo = full_report("solo", a, std::nullopt, std::nullopt);
  CHECK(solo.components.size() == 3);
  CHECK(solo.pairs.empty());
}

TEST_CASE("csv exports") {
  Histogram h{};
  h[0] = 3;
  h[255] = 1;
  const std::string hc = histogram_csv(h);
  CHECK(hc.rfind("bin,count\n0,3\n1,0\n", 0) == 0);
  CHECK(hc.find("\n255,1\n") != std::string::npos);

  ScatterSample s{99, {{1, 2}, {3, 4}}};
  CHECK(scatter_csv(s, Direction::kVertical) ==
        "# seed=99,direction=vertical\nvalue,neighbor\n1,2\n3,4\n");
}

TEST_CASE("cipher output statistics") {
  const ImageRGB img = load_ppm(test::data_path("chelsea.ppm"));
  const KeyTriple keys{SecretKey("Lorenz"), SecretKey("Chaos7"), SecretKey("k3y!@#")};
  const CipherBundle b = encrypt_image(img, keys);
  for (const Plane& p : b.dic) {
    const Histogram h = histogram(p);
    const double mean = p.size() / 256.0;
    CHECK(*std::max_element(h.begin(), h.end()) <= 2.0 * mean);
    CHECK(entropy(p) >= 7.99);
  }
}
