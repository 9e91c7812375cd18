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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldct/analysis.hpp"
#include "ldct/bundle.hpp"
#include "ldct/cipher.hpp"
#include "ldct/error.hpp"
#include "ldct/image_io.hpp"
#include "ldct/keystream.hpp"
#include "ldct/lorenz.hpp"
#include "ldct/report.hpp"
#include "ldct/selftest.hpp"

namespace ldct::cli {

namespace {

namespace fs = std::filesystem;

// Bad flag values found after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KeyOptions {
  std::string key1, key2, key3;
  std::vector<int> shifts;
  std::vector<int> rotations;
  double energy_fraction = kDefaultEnergyFraction;
};

void add_key_options(CLI::App* cmd, KeyOptions& o) {
  cmd->add_option("--key1", o.key1, "first 6-character key")->required();
  cmd->add_option("--key2", o.key2, "second 6-character key")->required();
  cmd->add_option("--key3", o.key3, "third 6-character key")->required();
  cmd->add_option("--shifts", o.shifts, "per-round cyclic shifts a,b,c")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--rotations", o.rotations,
                  "key rotations: 3 values for every key or 9 values r11,r12,..")
      ->delimiter(',')
      ->expected(3, 9);
  cmd->add_option("--energy-fraction", o.energy_fraction,
                  "retained DCT energy fraction in (0,1]");
}

std::array<std::array<int, 3>, 3> rotation_schedule(const std::vector<int>& r) {
  std::array<std::array<int, 3>, 3> out{};
  if (r.size() == 3) {
    for (auto& k : out) k = {r[0], r[1], r[2]};
  } else if (r.size() == 9) {
    for (std::size_t k = 0; k < 3; ++k) out[k] = {r[3 * k], r[3 * k + 1], r[3 * k + 2]};
  } else {
    throw UsageError("--rotations takes 3 or 9 values");
  }
  for (const auto& k : out)
    for (int v : k)
      if (v < 0 || v > 255) throw UsageError("rotation out of range 0..255");
  return out;
}

KeyTriple make_keys(const KeyOptions& o,
                    const std::array<std::array<int, 3>, 3>& rot) {
  try {
    return {SecretKey(o.key1, rot[0]), SecretKey(o.key2, rot[1]),
            SecretKey(o.key3, rot[2])};
  } catch (const InvalidKeyError& e) {
    throw UsageError(e.what());
  }
}

std::array<int, 3> shift_schedule(const std::vector<int>& s) {
  if (s.size() != 3) throw UsageError("--shifts takes 3 values");
  for (int v : s)
    if (v < 0 || v > 65535) throw UsageError("shift out of range 0..65535");
  return {s[0], s[1], s[2]};
}

KeystreamConfig make_config(const KeyOptions& o) {
  if (!(o.energy_fraction > 0.0 && o.energy_fraction <= 1.0))
    throw UsageError("--energy-fraction must lie in (0,1]");
  KeystreamConfig cfg;
  cfg.energy_fraction = o.energy_fraction;
  return cfg;
}

int do_encrypt(const std::string& in, const std::string& out, const KeyOptions& o) {
  const auto rot = rotation_schedule(
      o.rotations.empty()
          ? std::vector<int>(kDefaultRotations.begin(), kDefaultRotations.end())
          : o.rotations);
  const KeyTriple keys = make_keys(o, rot);
  const auto shifts = o.shifts.empty() ? kDefaultShifts : shift_schedule(o.shifts);
  const KeystreamConfig cfg = make_config(o);
  const ImageRGB img = load_ppm(in);
  if (img.width() != img.height())
    throw DimensionError("image is " + std::to_string(img.width()) + "x" +
                         std::to_string(img.height()) + ", must be square");
  write_bundle(out, encrypt_image(img, keys, shifts, cfg));
  return kOk;
}

int do_decrypt(const std::string& in, const std::string& out, const KeyOptions& o) {
  CipherBundle bundle = read_bundle(in);
  std::array<std::array<int, 3>, 3> rot{};
  if (o.rotations.empty()) {
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < 3; ++j) rot[k][j] = bundle.rotations[k][j];
  } else {
    rot = rotation_schedule(o.rotations);
  }
  if (!o.shifts.empty()) {
    const auto s = shift_schedule(o.shifts);
    for (std::size_t r = 0; r < 3; ++r) bundle.shifts[r] = static_cast<std::uint16_t>(s[r]);
  }
  const KeyTriple keys = make_keys(o, rot);
  save_ppm(out, decrypt_image(bundle, keys, make_config(o)));
  return kOk;
}

std::string file_tag(std::string name) {
  std::replace(name.begin(), name.end(), '/', '_');
  return name;
}

struct AnalyzeOptions {
  std::string original, bundle, decrypted, json, scatter_dir, hist_dir;
  std::size_t scatter_count = 3000;
  std::uint64_t seed = kDefaultScatterSeed;
};

int do_analyze(const AnalyzeOptions& o) {
  const ImageRGB original = load_ppm(o.original);
  std::optional<ImageRGB> encrypted, decrypted;
  if (!o.bundle.empty()) {
    const CipherBundle b = read_bundle(o.bundle);
    encrypted = ImageRGB{b.dic};
  }
  if (!o.decrypted.empty()) decrypted = load_ppm(o.decrypted);

  const AnalysisReport report =
      full_report(fs::path(o.original).stem().string(), original, encrypted, decrypted);
  write_text(o.json, to_json(report).dump(2) + "\n");

  if (!o.hist_dir.empty()) {
    fs::create_directories(o.hist_dir);
    for (const auto& c : report.components)
      write_text(fs::path(o.hist_dir) / ("hist_" + file_tag(c.name) + ".csv"),
                 histogram_csv(c.histogram));
  }
  if (!o.scatter_dir.empty()) {
    fs::create_directories(o.scatter_dir);
    std::vector<std::pair<std::string, const ImageRGB*>> images = {{"original", &original}};
    if (encrypted) images.emplace_back("encrypted", &*encrypted);
    if (decrypted) images.emplace_back("decrypted", &*decrypted);
    for (const auto& [label, img] : images) {
      for (std::size_t c = 0; c < 3; ++c) {
        const Plane& p = img->planes[c];
        for (Direction d : {Direction::kHorizontal, Direction::kVertical,
                            Direction::kDiagonal}) {
          const std::size_t population =
              d == Direction::kHorizontal ? p.rows() * (p.cols() - 1)
              : d == Direction::kVertical ? (p.rows() - 1) * p.cols()
                                          : (p.rows() - 1) * (p.cols() - 1);
          const ScatterSample s =
              scatter_sample(p, d, std::min(o.scatter_count, population), o.seed);
          write_text(fs::path(o.scatter_dir) /
                         ("scatter_" + label + "_" + kComponentNames[c] + "_" +
                          direction_name(d) + ".csv"),
                     scatter_csv(s, d));
        }
      }
    }
  }

  std::cout << std::fixed << std::setprecision(4);
  for (const auto& c : report.components)
    std::cout << c.name << " entropy=" << c.entropy << " r_h=" << c.correlation.horizontal
              << " r_v=" << c.correlation.vertical << " r_d=" << c.correlation.diagonal
              << '\n';
  for (const auto& p : report.pairs)
    std::cout << p.a << " vs " << p.b << " npcr=" << p.npcr << " uaci=" << p.uaci
              << " mae=" << p.mae << " psnr=" << p.psnr << '\n';
  return kOk;
}

int do_lorenz(const std::string& key, const std::vector<int>& rotations,
              const std::string& dump) {
  std::array<int, 3> rot = kDefaultRotations;
  if (!rotations.empty()) {
    if (rotations.size() != 3) throw UsageError("--rotations takes 3 values here");
    rot = {rotations[0], rotations[1], rotations[2]};
  }
  SecretKey k = [&] {
    try {
      return SecretKey(key, rot);
    } catch (const InvalidKeyError& e) {
      throw UsageError(e.what());
    }
  }();
  const KeystreamConfig cfg;
  const State3 s0 = derive_initial_conditions(k);
  const Trajectory tr = integrate(cfg.params, s0, cfg.t_start, cfg.t_end, cfg.dt);

  std::ofstream f(dump, std::ios::binary);
  if (!f) throw Error("cannot open " + dump + " for writing");
  f << "t,x,y,z\n" << std::setprecision(17);
  for (std::size_t i = 0; i < tr.size(); ++i)
    f << tr.t[i] << ',' << tr.x[i] << ',' << tr.y[i] << ',' << tr.z[i] << '\n';
  if (!f) throw Error("write failed: " + dump);

  const TruncatedVectors tv = truncated_vectors(tr, cfg.energy_fraction);
  std::cout << std::setprecision(14) << "x0=" << s0.x << " y0=" << s0.y << " z0=" << s0.z
            << " samples=" << tr.size() << " kept=" << tv.x.size() << '/' << tv.y.size()
            << '/' << tv.z.size() << '\n';
  return kOk;
}

void write_perms(const fs::path& path, const std::vector<Permutation>& perms) {
  std::ostringstream os;
  for (const auto& p : perms) {
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << '\n';
  }
  write_text(path, os.str());
}

int do_keystream(const std::string& key, const std::vector<int>& rotations,
                 std::size_t size, const std::string& dir) {
  std::array<int, 3> rot = kDefaultRotations;
  if (!rotations.empty()) {
    if (rotations.size() != 3) throw UsageError("--rotations takes 3 values here");
    rot = {rotations[0], rotations[1], rotations[2]};
  }
  std::optional<SecretKey> k;
  try {
    k.emplace(key, rot);
  } catch (const InvalidKeyError& e) {
    throw UsageError(e.what());
  }
  const RoundKeystream ks = build_round_keystream(*k, size);
  fs::create_directories(dir);
  static constexpr std::array<const char*, 3> kLabels = {"XY", "XZ", "YZ"};
  for (std::size_t i = 0; i < 3; ++i) {
    const fs::path base = fs::path(dir) / (std::string("plane_") + kLabels[i]);
    save_pgm(base.string() + ".pgm", ks.planes[i].bytes);
    write_perms(base.string() + "_rowperm.csv", ks.planes[i].row_perm);
    write_perms(base.string() + "_colperm.csv", ks.planes[i].col_perm);
  }
  return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Lorenz/DCT colour image cipher"};
  app.name(argc > 0 ? fs::path(argv[0]).filename().string() : "ldct");
  app.require_subcommand(1);

  std::string in, out;
  KeyOptions keys;

  auto* enc = app.add_subcommand("encrypt", "encrypt a P6 image into a bundle");
  enc->add_option("--in", in, "input PPM")->required();
  enc->add_option("--out", out, "output bundle")->required();
  add_key_options(enc, keys);

  auto* dec = app.add_subcommand("decrypt", "decrypt a bundle into a P6 image");
  dec->add_option("--in", in, "input bundle")->required();
  dec->add_option("--out", out, "output PPM")->required();
  add_key_options(dec, keys);

  AnalyzeOptions ao;
  auto* ana = app.add_subcommand("analyze", "statistics report");
  ana->add_option("--original", ao.original, "original PPM")->required();
  ana->add_option("--bundle", ao.bundle, "cipher bundle");
  ana->add_option("--decrypted", ao.decrypted, "decrypted PPM");
  ana->add_option("--json", ao.json, "JSON report path")->required();
  ana->add_option("--scatter-csv", ao.scatter_dir, "directory for scatter CSVs");
  ana->add_option("--hist-csv", ao.hist_dir, "directory for histogram CSVs");
  ana->add_option("--scatter-count", ao.scatter_count, "pairs per scatter plot")
      ->capture_default_str();
  ana->add_option("--seed", ao.seed, "scatter sampling seed")->capture_default_str();

  std::string key, dump;
  std::vector<int> rotations;
  auto* lor = app.add_subcommand("lorenz", "dump the trajectory for one key");
  lor->add_option("--key", key, "6-character key")->required();
  lor->add_option("--dump", dump, "CSV output (t,x,y,z)")->required();
  lor->add_option("--rotations", rotations, "three rotation counts")
      ->delimiter(',')
      ->expected(3);

  std::size_t ks_size = 256;
  std::string ks_dir;
  auto* ksc = app.add_subcommand("keystream", "dump keystream planes and permutations");
  ksc->add_option("--key", key, "6-character key")->required();
  ksc->add_option("--size", ks_size, "plane side")->capture_default_str();
  ksc->add_option("--out-dir", ks_dir, "output directory")->required();
  ksc->add_option("--rotations", rotations, "three rotation counts")
      ->delimiter(',')
      ->expected(3);

  auto* self = app.add_subcommand("selftest", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ldct: usage: " << e.what() << '\n'
              << "run with --help for the list of options\n";
    return kUsage;
  }

  try {
    if (*enc) return do_encrypt(in, out, keys);
    if (*dec) return do_decrypt(in, out, keys);
    if (*ana) return do_analyze(ao);
    if (*lor) return do_lorenz(key, rotations, dump);
    if (*ksc) return do_keystream(key, rotations, ks_size, ks_dir);
    if (*self) return run_selftest(std::cout) == 0 ? kOk : kVerificationFailure;
  } catch (const UsageError& e) {
    std::cerr << "ldct: usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ChecksumError& e) {
    std::cerr << "ldct: checksum error: " << e.what() << '\n';
    return kDataError;
  } catch (const FormatError& e) {
    std::cerr << "ldct: format error: " << e.what() << '\n';
    return kDataError;
  } catch (const Error& e) {
    std::cerr << "ldct: error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "ldct: error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

int cli_main(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace ldct::cli
