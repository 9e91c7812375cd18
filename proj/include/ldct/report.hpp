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

// Machine-readable exports of analysis results.
//
// JSON report:
//   {"image": str, "dims": {"width": n, "height": n},
//    "components": [{"name", "entropy", "correlation": {"h","v","d"},
//                    "histogram": [256 counts]}],
//    "pairs": [{"a", "b", "npcr", "uaci", "mae", "mse", "psnr"}]}
// An infinite PSNR (identical planes) is written as the string "inf".
//
// CSV: histogram rows "bin,count"; scatter rows "value,neighbor" preceded by
// a "# seed=<seed>,direction=<dir>" line.

#ifndef LDCT_REPORT_HPP_
#define LDCT_REPORT_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "ldct/analysis.hpp"

namespace ldct {

nlohmann::json to_json(const AnalysisReport& report);

std::string histogram_csv(const Histogram& h);
std::string scatter_csv(const ScatterSample& s, Direction d);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace ldct

#endif  // LDCT_REPORT_HPP_
