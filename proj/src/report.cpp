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

#include "ldct/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ldct/error.hpp"

namespace ldct {

namespace {

nlohmann::json finite_or_tag(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& report) {
  nlohmann::json j;
  j["image"] = report.image;
  j["dims"] = {{"width", report.width}, {"height", report.height}};

  j["components"] = nlohmann::json::array();
  for (const auto& c : report.components) {
    j["components"].push_back({
        {"name", c.name},
        {"entropy", c.entropy},
        {"correlation",
         {{"h", c.correlation.horizontal},
          {"v", c.correlation.vertical},
          {"d", c.correlation.diagonal}}},
        {"histogram", c.histogram},
    });
  }

  j["pairs"] = nlohmann::json::array();
  for (const auto& p : report.pairs) {
    j["pairs"].push_back({
        {"a", p.a},
        {"b", p.b},
        {"npcr", p.npcr},
        {"uaci", p.uaci},
        {"mae", p.mae},
        {"mse", p.mse},
        {"psnr", finite_or_tag(p.psnr)},
    });
  }
  return j;
}

std::string histogram_csv(const Histogram& h) {
  std::ostringstream out;
  out << "bin,count\n";
  for (std::size_t i = 0; i < h.size(); ++i) out << i << ',' << h[i] << '\n';
  return out.str();
}

std::string scatter_csv(const ScatterSample& s, Direction d) {
  std::ostringstream out;
  out << "# seed=" << s.seed << ",direction=" << direction_name(d) << '\n';
  out << "value,neighbor\n";
  for (const auto& [v, n] : s.pairs) out << int{v} << ',' << int{n} << '\n';
  return out.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

}  // namespace ldct
