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

#ifndef GEOFPE_DATASET_H_
#define GEOFPE_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geofpe/decimal.h"

namespace geofpe {

// One GPS fix. `timestamp` is carried verbatim; `coord_id` is assigned after
// cleaning and is unique within a dataset.
struct TrajectoryRecord {
  std::string vehicle_id;
  std::string timestamp;
  GeoPoint point;
  std::uint64_t coord_id = 0;

  friend bool operator==(const TrajectoryRecord&,
                         const TrajectoryRecord&) = default;
};

struct Trajectory {
  std::string vehicle_id;
  std::vector<TrajectoryRecord> records;
};

// "id,datetime,longitude,latitude". Throws ParseError. A trailing '\r' is
// ignored.
TrajectoryRecord ParseLine(std::string_view line);

// "coord_id,id,datetime,enc_lon,enc_lat". Throws ParseError.
TrajectoryRecord ParseEncryptedLine(std::string_view line);

std::string FormatLine(const TrajectoryRecord& r);
std::string FormatEncryptedLine(const TrajectoryRecord& r);

struct CleanResult {
  std::vector<TrajectoryRecord> kept;
  std::size_t dropped = 0;
};

// Drops records whose point fails ValidatePoint; order is preserved.
CleanResult Clean(std::vector<TrajectoryRecord> records);

struct LineError {
  std::size_t line_number = 0;  // 1-based
  std::string reason;
};

// A trajectory file after parsing and cleaning.
struct ParsedFile {
  std::string file_name;
  std::vector<TrajectoryRecord> records;
  std::vector<LineError> errors;  // parse failures and dropped points
  std::vector<std::size_t> line_numbers;  // source line of each kept record
  std::size_t parse_errors = 0;
  std::size_t dropped_invalid = 0;
};

enum class LineFormat { kPlain, kEncrypted, kAuto };

// Reads one file. Blank lines are skipped. With kAuto the layout is chosen
// per line from the field count (4 plain, 5 encrypted).
ParsedFile ReadTrajectoryFile(const std::filesystem::path& path,
                              LineFormat format = LineFormat::kPlain);

// Regular *.txt files in `dir`, sorted by file name.
std::vector<std::filesystem::path> ListTrajectoryFiles(
    const std::filesystem::path& dir);

// Writes "<name>.errors" into `dir` when `errors` is non-empty, otherwise
// removes any stale sidecar.
void WriteErrorSidecar(const std::filesystem::path& dir,
                       const std::string& file_name,
                       std::span<const LineError> errors);

struct SampleIndex {
  std::size_t trajectory = 0;
  std::size_t record = 0;
  friend bool operator==(const SampleIndex&, const SampleIndex&) = default;
};

// Stratified sample of `n_total` points from strata of the given sizes.
// Quotas are proportional to stratum size with largest-remainder rounding
// (ties go to the earlier stratum). Within a stratum, points are drawn
// uniformly without replacement. Output is ordered by (trajectory, record).
// Throws DomainError when n_total exceeds the population.
std::vector<SampleIndex> StratifiedSample(std::span<const std::size_t> sizes,
                                          std::size_t n_total,
                                          std::uint64_t seed);

std::vector<SampleIndex> StratifiedSample(
    std::span<const Trajectory> trajectories, std::size_t n_total,
    std::uint64_t seed);

// Largest-remainder quotas, exposed for testing.
std::vector<std::size_t> ProportionalQuotas(std::span<const std::size_t> sizes,
                                            std::size_t n_total);

// Loads every trajectory file of a directory (cleaned, plain or encrypted
// layout). Files without records are kept so directories stay aligned.
std::vector<Trajectory> LoadTrajectories(const std::filesystem::path& dir,
                                         LineFormat format = LineFormat::kAuto);

}  // namespace geofpe

#endif  // GEOFPE_DATASET_H_
