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

#ifndef GEOFPE_METRICS_ACCURACY_H_
#define GEOFPE_METRICS_ACCURACY_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace geofpe {

struct FileAccuracy {
  std::string file_name;
  std::size_t points = 0;
  std::size_t matched = 0;
  double fmr = 1.0;  // matched / points; 1 for an empty file
  bool missing = false;
};

struct AccuracyReport {
  std::size_t total_points = 0;
  std::size_t exact_matches = 0;
  std::size_t mismatched = 0;
  double omr = 1.0;  // 1 when there are no points
  double mmr = 0.0;
  std::size_t file_count = 0;
  std::size_t fully_matched_files = 0;
  std::vector<FileAccuracy> files;
  std::vector<std::string> missing_files;
};

// Point-to-point comparison of every *.txt file of `original_dir` with the
// same-named file of `decrypted_dir`. The n-th 4-column line of one file is
// compared with the n-th of the other; a point matches only when both the
// longitude and the latitude text are byte-identical. A missing counterpart
// counts as fully mismatched.
AccuracyReport EvaluateAccuracy(const std::filesystem::path& original_dir,
                                const std::filesystem::path& decrypted_dir);

}  // namespace geofpe

#endif  // GEOFPE_METRICS_ACCURACY_H_
