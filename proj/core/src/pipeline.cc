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

#include "geofpe/pipeline.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>

#include "geofpe/dataset.h"
#include "geofpe/errors.h"
#include "geofpe/range_constraint.h"
#include "parallel.h"

namespace geofpe {
namespace {

using internal::ParallelFor;

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void WriteLines(const std::filesystem::path& path,
                const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  for (const auto& l : lines) out << l << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

bool IsPassthrough(std::uint64_t v, bool is_lon) {
  return ClassifyRange(v, is_lon, true) == RangeType::kPassthrough;
}

struct Recovery {
  std::optional<std::uint64_t> value;
  bool fuzzy = false;
  std::string failure;
};

Recovery Recover(const MappingStore& store, ComponentKind kind,
                 std::uint64_t coord_id, std::uint64_t enc) {
  Recovery r;
  if (auto v = store.LookupExact(kind, coord_id, enc)) {
    r.value = *v;
    return r;
  }
  const auto fuzzy = store.LookupFuzzy(kind, enc);
  switch (fuzzy.status) {
    case MappingStore::FuzzyResult::Status::kFound:
      r.value = fuzzy.value;
      r.fuzzy = true;
      break;
    case MappingStore::FuzzyResult::Status::kAmbiguous:
      r.failure = std::string(ComponentTag(kind)) + " value " +
                  std::to_string(enc) + " is ambiguous (" +
                  std::to_string(fuzzy.candidates) + " candidates)";
      break;
    case MappingStore::FuzzyResult::Status::kNotFound:
      r.failure = std::string(ComponentTag(kind)) + " value " +
                  std::to_string(enc) + " not in mapping store";
      break;
  }
  return r;
}

}  // namespace

EncryptSummary EncryptDataset(const std::filesystem::path& input_dir,
                              const std::filesystem::path& output_dir,
                              const MasterKey& key,
                              const PipelineOptions& options,
                              MappingStore& store) {
  const auto start = std::chrono::steady_clock::now();
  std::filesystem::create_directories(output_dir);
  const auto files = ListTrajectoryFiles(input_dir);

  std::vector<ParsedFile> parsed(files.size());
  ParallelFor(files.size(), options.workers, [&](std::size_t i) {
    parsed[i] = ReadTrajectoryFile(files[i], LineFormat::kPlain);
  });

  std::uint64_t next_id = 0;
  for (auto& file : parsed) {
    for (auto& r : file.records) r.coord_id = next_id++;
  }

  const ComponentCipher cipher(key, options.params);
  std::vector<std::size_t> passthrough(files.size(), 0);
  ParallelFor(files.size(), options.workers, [&](std::size_t i) {
    ParsedFile& file = parsed[i];
    std::vector<std::string> lines;
    lines.reserve(file.records.size());
    for (const TrajectoryRecord& r : file.records) {
      const GeoPoint& p = r.point;
      if (IsPassthrough(p.lon.int_part, true)) ++passthrough[i];
      if (IsPassthrough(p.lat.int_part, false)) ++passthrough[i];

      TrajectoryRecord enc = r;
      enc.point = cipher.EncryptPoint(p);
      store.Record(ComponentKind::kLonInt, r.coord_id, enc.point.lon.int_part,
                   p.lon.int_part);
      store.Record(ComponentKind::kLonFrac, r.coord_id,
                   enc.point.lon.frac_value, p.lon.frac_value,
                   p.lon.frac_digits);
      store.Record(ComponentKind::kLatInt, r.coord_id, enc.point.lat.int_part,
                   p.lat.int_part);
      store.Record(ComponentKind::kLatFrac, r.coord_id,
                   enc.point.lat.frac_value, p.lat.frac_value,
                   p.lat.frac_digits);
      lines.push_back(FormatEncryptedLine(enc));
    }
    WriteLines(output_dir / file.file_name, lines);
    WriteErrorSidecar(output_dir, file.file_name, file.errors);
  });

  EncryptSummary summary;
  summary.files = files.size();
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const ParsedFile& f = parsed[i];
    summary.records_out += f.records.size();
    summary.records_in += f.records.size() + f.dropped_invalid;
    summary.parse_errors += f.parse_errors;
    summary.dropped_invalid += f.dropped_invalid;
    summary.passthrough += passthrough[i];
    summary.per_file.push_back({f.file_name, f.records.size(), f.errors.size()});
  }
  for (ComponentKind k : kAllComponentKinds) {
    const auto idx = static_cast<std::size_t>(k);
    summary.conflicts[idx] = store.ConflictCount(k);
    summary.conflict_rates[idx] = store.GetConflictRate(k);
  }
  summary.elapsed_seconds = SecondsSince(start);
  return summary;
}

DecryptSummary DecryptDataset(const std::filesystem::path& encrypted_dir,
                              const std::filesystem::path& output_dir,
                              const MasterKey& key,
                              const PipelineOptions& options,
                              const MappingStore& store) {
  const auto start = std::chrono::steady_clock::now();
  std::filesystem::create_directories(output_dir);
  const auto files = ListTrajectoryFiles(encrypted_dir);
  const ComponentCipher cipher(key, options.params);

  struct Outcome {
    FileSummary summary;
    std::size_t records = 0;
    std::size_t fuzzy = 0;
  };
  std::vector<Outcome> outcomes(files.size());

  ParallelFor(files.size(), options.workers, [&](std::size_t i) {
    ParsedFile file = ReadTrajectoryFile(files[i], LineFormat::kEncrypted);
    Outcome& out = outcomes[i];
    out.summary.file_name = file.file_name;
    out.records = file.records.size() + file.dropped_invalid;
    std::vector<LineError> errors = std::move(file.errors);
    std::vector<std::string> lines;
    lines.reserve(file.records.size());

    for (std::size_t n = 0; n < file.records.size(); ++n) {
      const TrajectoryRecord& enc = file.records[n];
      TrajectoryRecord plain = enc;
      std::string failure;
      std::size_t fuzzy_here = 0;

      auto restore = [&](ComponentKind kind, std::uint64_t enc_value,
                         std::uint64_t& slot) {
        if (!failure.empty()) return;
        Recovery r = Recover(store, kind, enc.coord_id, enc_value);
        if (!r.value) {
          failure = r.failure;
          return;
        }
        slot = *r.value;
        if (r.fuzzy) ++fuzzy_here;
      };
      restore(ComponentKind::kLonInt, enc.point.lon.int_part,
              plain.point.lon.int_part);
      restore(ComponentKind::kLonFrac, enc.point.lon.frac_value,
              plain.point.lon.frac_value);
      restore(ComponentKind::kLatInt, enc.point.lat.int_part,
              plain.point.lat.int_part);
      restore(ComponentKind::kLatFrac, enc.point.lat.frac_value,
              plain.point.lat.frac_value);

      if (failure.empty()) {
        try {
          CheckDecimal(plain.point.lon);
          CheckDecimal(plain.point.lat);
          if (cipher.EncryptPoint(plain.point) != enc.point) {
            failure = "recovered plaintext does not re-encrypt to the "
                      "ciphertext (wrong key or map)";
          }
        } catch (const DomainError& e) {
          failure = std::string("recovered value invalid: ") + e.what();
        }
      }
      if (!failure.empty()) {
        errors.push_back({file.line_numbers[n], failure});
        continue;
      }
      out.fuzzy += fuzzy_here;
      lines.push_back(FormatLine(plain));
    }
    std::sort(errors.begin(), errors.end(),
              [](const LineError& a, const LineError& b) {
                return a.line_number < b.line_number;
              });
    out.summary.records = lines.size();
    out.summary.errors = errors.size();
    WriteLines(output_dir / file.file_name, lines);
    WriteErrorSidecar(output_dir, file.file_name, errors);
  });

  DecryptSummary summary;
  summary.files = files.size();
  for (const Outcome& o : outcomes) {
    summary.records += o.records;
    summary.restored += o.summary.records;
    summary.failures += o.summary.errors;
    summary.fuzzy_recoveries += o.fuzzy;
    summary.per_file.push_back(o.summary);
  }
  summary.elapsed_seconds = SecondsSince(start);
  return summary;
}

}  // namespace geofpe
