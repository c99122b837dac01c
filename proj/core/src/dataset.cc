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

#include "geofpe/dataset.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>

#include "geofpe/errors.h"
#include "geofpe/random.h"

namespace geofpe {
namespace {

std::vector<std::string_view> SplitCsv(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string FieldCountError(std::size_t got, std::size_t want) {
  return "expected " + std::to_string(want) + " fields, got " +
         std::to_string(got);
}

TrajectoryRecord FromFields(std::string_view id, std::string_view ts,
                            std::string_view lon, std::string_view lat) {
  if (id.empty()) throw ParseError("empty vehicle id");
  TrajectoryRecord r;
  r.vehicle_id = std::string(id);
  r.timestamp = std::string(ts);
  r.point.lon = Decompose(lon);
  r.point.lat = Decompose(lat);
  return r;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

TrajectoryRecord ParseLine(std::string_view line) {
  const auto f = SplitCsv(line);
  if (f.size() != 4) throw ParseError(FieldCountError(f.size(), 4));
  return FromFields(f[0], f[1], f[2], f[3]);
}

TrajectoryRecord ParseEncryptedLine(std::string_view line) {
  const auto f = SplitCsv(line);
  if (f.size() != 5) throw ParseError(FieldCountError(f.size(), 5));
  std::uint64_t id = 0;
  const auto [ptr, ec] =
      std::from_chars(f[0].data(), f[0].data() + f[0].size(), id);
  if (ec != std::errc() || ptr != f[0].data() + f[0].size() || f[0].empty()) {
    throw ParseError("bad coord_id \"" + std::string(f[0]) + "\"");
  }
  TrajectoryRecord r = FromFields(f[1], f[2], f[3], f[4]);
  r.coord_id = id;
  return r;
}

std::string FormatLine(const TrajectoryRecord& r) {
  return r.vehicle_id + ',' + r.timestamp + ',' + Recombine(r.point.lon) +
         ',' + Recombine(r.point.lat);
}

std::string FormatEncryptedLine(const TrajectoryRecord& r) {
  return std::to_string(r.coord_id) + ',' + FormatLine(r);
}

CleanResult Clean(std::vector<TrajectoryRecord> records) {
  CleanResult result;
  result.kept.reserve(records.size());
  for (auto& r : records) {
    if (ValidatePoint(r.point) == PointValidity::kValid) {
      result.kept.push_back(std::move(r));
    } else {
      ++result.dropped;
    }
  }
  return result;
}

ParsedFile ReadTrajectoryFile(const std::filesystem::path& path,
                              LineFormat format) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  ParsedFile out;
  out.file_name = path.filename().string();

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    TrajectoryRecord r;
    try {
      switch (format) {
        case LineFormat::kPlain:
          r = ParseLine(line);
          break;
        case LineFormat::kEncrypted:
          r = ParseEncryptedLine(line);
          break;
        case LineFormat::kAuto:
          r = SplitCsv(line).size() == 5 ? ParseEncryptedLine(line)
                                         : ParseLine(line);
          break;
      }
    } catch (const ParseError& e) {
      ++out.parse_errors;
      out.errors.push_back({line_no, e.what()});
      continue;
    }
    const PointValidity v = ValidatePoint(r.point);
    if (v != PointValidity::kValid) {
      ++out.dropped_invalid;
      out.errors.push_back({line_no, PointValidityName(v)});
      continue;
    }
    out.records.push_back(std::move(r));
    out.line_numbers.push_back(line_no);
  }
  return out;
}

std::vector<std::filesystem::path> ListTrajectoryFiles(
    const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) {
              return a.filename().string() < b.filename().string();
            });
  return files;
}

void WriteErrorSidecar(const std::filesystem::path& dir,
                       const std::string& file_name,
                       std::span<const LineError> errors) {
  const auto path = dir / (file_name + ".errors");
  if (errors.empty()) {
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  for (const auto& e : errors) out << e.line_number << ": " << e.reason << '\n';
}

std::vector<std::size_t> ProportionalQuotas(std::span<const std::size_t> sizes,
                                            std::size_t n_total) {
  const std::size_t population =
      std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (n_total > population) {
    throw DomainError("sample size " + std::to_string(n_total) +
                      " exceeds population " + std::to_string(population));
  }
  std::vector<std::size_t> quotas(sizes.size(), 0);
  if (population == 0) return quotas;

  // Exact integer arithmetic: quota_i = floor(n * size_i / N), remainder
  // (n * size_i) mod N decides who gets the leftover units.
  __extension__ using Wide = unsigned __int128;
  std::vector<std::pair<Wide, std::size_t>> remainders;
  remainders.reserve(sizes.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const Wide scaled = static_cast<Wide>(n_total) * sizes[i];
    quotas[i] = static_cast<std::size_t>(scaled / population);
    assigned += quotas[i];
    remainders.emplace_back(scaled % population, i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < n_total; ++k, ++assigned) {
    ++quotas[remainders[k].second];
  }
  return quotas;
}

std::vector<SampleIndex> StratifiedSample(std::span<const std::size_t> sizes,
                                          std::size_t n_total,
                                          std::uint64_t seed) {
  const std::vector<std::size_t> quotas = ProportionalQuotas(sizes, n_total);
  Rng rng(seed);
  std::vector<SampleIndex> out;
  out.reserve(n_total);
  std::vector<std::size_t> pool;
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    const std::size_t quota = quotas[t];
    if (quota == 0) continue;
    // Partial Fisher-Yates: the first `quota` slots are the draw.
    pool.resize(sizes[t]);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t k = 0; k < quota; ++k) {
      const std::size_t j = k + static_cast<std::size_t>(rng.Below(sizes[t] - k));
      std::swap(pool[k], pool[j]);
    }
    std::sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(quota));
    for (std::size_t k = 0; k < quota; ++k) out.push_back({t, pool[k]});
  }
  return out;
}

std::vector<SampleIndex> StratifiedSample(
    std::span<const Trajectory> trajectories, std::size_t n_total,
    std::uint64_t seed) {
  std::vector<std::size_t> sizes;
  sizes.reserve(trajectories.size());
  for (const auto& t : trajectories) sizes.push_back(t.records.size());
  return StratifiedSample(sizes, n_total, seed);
}

std::vector<Trajectory> LoadTrajectories(const std::filesystem::path& dir,
                                         LineFormat format) {
  std::vector<Trajectory> out;
  for (const auto& path : ListTrajectoryFiles(dir)) {
    ParsedFile parsed = ReadTrajectoryFile(path, format);
    Trajectory t;
    t.vehicle_id = parsed.records.empty() ? path.stem().string()
                                          : parsed.records.front().vehicle_id;
    t.records = std::move(parsed.records);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace geofpe
