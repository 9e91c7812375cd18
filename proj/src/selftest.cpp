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

#include "ldct/selftest.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "ldct/analysis.hpp"
#include "ldct/bundle.hpp"
#include "ldct/cipher.hpp"
#include "ldct/dct.hpp"
#include "ldct/error.hpp"
#include "ldct/keystream.hpp"
#include "ldct/lorenz.hpp"

namespace ldct {

namespace {

struct Check {
  const char* name;
  std::function<std::string()> run;  // empty string on success
};

Plane random_plane(std::size_t n, std::mt19937_64& rng) {
  Plane p(n, n);
  for (auto& v : p.values()) v = static_cast<std::uint8_t>(rng() & 0xFF);
  return p;
}

// Smooth synthetic colour image so the DCT pipeline has structure to keep.
ImageRGB gradient_image(std::size_t n) {
  ImageRGB img;
  for (std::size_t c = 0; c < 3; ++c) {
    img.planes[c] = Plane(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        img.planes[c](r, k) = static_cast<std::uint8_t>(
            (40 * c + 7 * r + 5 * k + (r * k) % 13) % 256);
  }
  return img;
}

std::vector<Check> checks() {
  return {
      {"key-derivation-range",
       [] {
         const State3 s = derive_initial_conditions(SecretKey("Lorenz"));
         for (double v : {s.x, s.y, s.z})
           if (v < 0.1 || v > 0.9) return std::string("initial condition out of range");
         if (!(derive_initial_conditions(SecretKey("Lorenz")) == s))
           return std::string("not deterministic");
         return std::string();
       }},
      {"equilibria-are-fixed-points",
       [] {
         const LorenzParams p;
         const auto [a, b] = equilibria(p);
         for (const State3& e : {a, b}) {
           const State3 d = lorenz_derivative(e, p);
           if (std::fabs(d.x) + std::fabs(d.y) + std::fabs(d.z) > 1e-12)
             return std::string("derivative does not vanish");
         }
         return std::string();
       }},
      {"chaotic-regime",
       [] {
         LorenzParams p;
         if (!is_chaotic_regime(p)) return std::string("defaults not chaotic");
         p.rho = 0.5;
         if (is_chaotic_regime(p)) return std::string("rho=0.5 reported chaotic");
         return std::string();
       }},
      {"dct2-roundtrip-parseval",
       [] {
         std::mt19937_64 rng(1);
         RealMatrix f(16, 16);
         for (auto& v : f.values()) v = static_cast<double>(rng() % 256);
         const RealMatrix F = dct2(f);
         const RealMatrix g = idct2(F);
         double ef = 0, eF = 0, err = 0;
         for (std::size_t i = 0; i < f.size(); ++i) {
           ef += f.values()[i] * f.values()[i];
           eF += F.values()[i] * F.values()[i];
           err = std::max(err, std::fabs(f.values()[i] - g.values()[i]));
         }
         if (err > 1e-9) return std::string("round trip error");
         if (std::fabs(ef - eF) > 1e-9 * ef) return std::string("Parseval violated");
         return std::string();
       }},
      {"dct1-roundtrip",
       [] {
         std::vector<double> x(1001);
         for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(0.1 * i) * 10 + i % 7;
         const auto y = idct1(dct1(x));
         for (std::size_t i = 0; i < x.size(); ++i)
           if (std::fabs(x[i] - y[i]) > 1e-9) return std::string("round trip error");
         return std::string();
       }},
      {"conv-identity-kernel",
       [] {
         RealMatrix a(4, 4), delta(4, 4);
         for (std::size_t i = 0; i < a.size(); ++i) a.values()[i] = 300.5 + i;
         delta(0, 0) = 1.0;
         const Plane c = circular_conv2_mod(a, delta);
         for (std::size_t i = 0; i < a.size(); ++i)
           if (c.values()[i] != quantize_byte(a.values()[i]))
             return std::string("delta kernel is not the identity");
         return std::string();
       }},
      {"shuffle-roundtrip",
       [] {
         std::mt19937_64 rng(2);
         const KeystreamPlane ks = KeystreamPlane::from_bytes(random_plane(32, rng));
         for (int shift : {0, 1, 5, 31, 40}) {
           const Plane p = random_plane(32, rng);
           if (!(shuffle_decrypt(shuffle_encrypt(p, ks, shift), ks, shift) == p))
             return "shift " + std::to_string(shift) + " not inverted";
         }
         return std::string();
       }},
      {"log-embedding-roundtrip",
       [] {
         SparseCoeffs s{8, 8, {{0, 0, 1234.5}, {3, 2, -17.25}, {7, 7, 1.5}}, 1.0};
         std::mt19937_64 rng(3);
         const KeystreamPlane ks = KeystreamPlane::from_bytes(random_plane(8, rng));
         const RealMatrix logm = log_forward(s, 8);
         const RealMatrix back = extract_coeffs(embed_coeffs(logm, ks), ks);
         const SparseCoeffs r = log_inverse(back);
         if (r.entries.size() != s.entries.size()) return std::string("entry count changed");
         for (const auto& e : s.entries) {
           bool found = false;
           for (const auto& g : r.entries)
             if (g.row == e.row && g.col == e.col &&
                 std::fabs(g.value - e.value) <= 1e-12 * std::fabs(e.value))
               found = true;
           if (!found) return std::string("coefficient not recovered");
         }
         return std::string();
       }},
      {"encrypt-decrypt-16x16",
       [] {
         const ImageRGB img = gradient_image(16);
         const KeyTriple keys{SecretKey("alpha1"), SecretKey("bravo2"), SecretKey("charl3")};
         const CipherBundle b = encrypt_image(img, keys);
         const ImageRGB back = decrypt_image(parse_bundle(serialize_bundle(b)), keys);
         for (std::size_t c = 0; c < 3; ++c)
           if (psnr(img.planes[c], back.planes[c]) < 55.0)
             return std::string("decrypted PSNR below 55 dB");
         return std::string();
       }},
      {"bundle-crc-detects-corruption",
       [] {
         CipherBundle b;
         b.width = b.height = 2;
         for (auto& p : b.dic) p = Plane(2, 2, 7);
         for (auto& m : b.carriers) m = RealMatrix(2, 2, 1.25);
         auto bytes = serialize_bundle(b);
         if (bytes.size() != bundle_size(2)) return std::string("unexpected size");
         bytes[kBundleHeaderSize + 1] ^= 0x01;
         try {
           parse_bundle(bytes);
         } catch (const ChecksumError&) {
           return std::string();
         }
         return std::string("corruption not detected");
       }},
      {"uaci-mae-identity",
       [] {
         std::mt19937_64 rng(4);
         const Plane a = random_plane(16, rng), b = random_plane(16, rng);
         if (std::fabs(uaci(a, b) - mae(a, b) / 255.0 * 100.0) > 1e-9)
           return std::string("UACI != MAE/255*100");
         return std::string();
       }},
  };
}

}  // namespace

int run_selftest(std::ostream& out) {
  int failed = 0;
  for (const auto& check : checks()) {
    std::string detail;
    try {
      detail = check.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      out << "PASS " << check.name << '\n';
    } else {
      out << "FAIL " << check.name << ": " << detail << '\n';
      ++failed;
    }
  }
  out << (failed == 0 ? "selftest: all checks passed" : "selftest: failures present")
      << '\n';
  return failed;
}

}  // namespace ldct
