// Copyright 2026 The GeoFPE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geofpe/metrics/accuracy.h"

#include <fstream>
#include <utility>

#include "geofpe/dataset.h"
#include "geofpe/errors.h"

namespace geofpe {
namespace {

using CoordText = std::pair<std::string, std::string>;

// Longitude/latitude text of every 4-field line, in file order.
std::vector<CoordText> ReadCoordinateText(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<CoordText> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 4) continue;
    out.emplace_back(std::move(fields[2]), std::move(fields[3]));
  }
  return out;
}

}  // namespace

AccuracyReport EvaluateAccuracy(const std::filesystem::path& original_dir,
                                const std::filesystem::path& decrypted_dir) {
  AccuracyReport report;
  for (const auto& path : ListTrajectoryFiles(original_dir)) {
    FileAccuracy f;
    f.file_name = path.filename().string();
    const auto orig = ReadCoordinateText(path);
    f.points = orig.size();

    const auto counterpart = decrypted_dir / path.filename();
    if (!std::filesystem::is_regular_file(counterpart)) {
      f.missing = true;
      report.missing_files.push_back(f.file_name);
    } else {
      const auto dec = ReadCoordinateText(counterpart);
      for (std::size_t i = 0; i < orig.size() && i < dec.size(); ++i) {
        if (orig[i] == dec[i]) ++f.matched;
      }
    }
    f.fmr = f.points == 0 ? (f.missing ? 0.0 : 1.0)
                          : static_cast<double>(f.matched) /
                                static_cast<double>(f.points);
    report.total_points += f.points;
    report.exact_matches += f.matched;
    if (!f.missing && f.matched == f.points) ++report.fully_matched_files;
    report.files.push_back(std::move(f));
  }
  report.file_count = report.files.size();
  report.mismatched = report.total_points - report.exact_matches;
  if (report.total_points > 0) {
    report.omr = static_cast<double>(report.exact_matches) /
                 static_cast<double>(report.total_points);
    report.mmr = 1.0 - report.omr;
  }
  return report;
}

}  // namespace geofpe
