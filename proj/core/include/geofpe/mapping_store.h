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

#ifndef GEOFPE_MAPPING_STORE_H_
#define GEOFPE_MAPPING_STORE_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "geofpe/component.h"

namespace geofpe {

// (coordinate id, encrypted value) -> original value, one map per component
// kind. A second index per kind tracks the distinct originals seen for each
// encrypted value; it drives conflict detection, the conflict rate and the
// fuzzy fallback lookup.
//
// Record and the lookups may be called concurrently. Save/Export need
// quiescence. The final maps and counters depend only on the multiset of
// records, not on the order they arrived in.
class MappingStore {
 public:
  enum class RecordOutcome { kFresh, kConflict };

  struct FuzzyResult {
    enum class Status { kFound, kAmbiguous, kNotFound };
    Status status = Status::kNotFound;
    std::uint64_t value = 0;      // valid when kFound
    std::size_t candidates = 0;   // distinct originals behind the enc value
  };

  // |{enc values with >= 2 distinct originals}| / |{distinct enc values}|.
  struct ConflictRate {
    std::uint64_t conflicted = 0;
    std::uint64_t distinct = 0;
    double value() const {
      return distinct == 0 ? 0.0
                           : static_cast<double>(conflicted) /
                                 static_cast<double>(distinct);
    }
    friend bool operator==(const ConflictRate&, const ConflictRate&) = default;
  };

  struct Entry {
    ComponentKind kind;
    std::uint64_t coord_id;
    std::uint64_t enc_value;
    std::uint64_t orig_value;
    std::uint8_t frac_digits;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  MappingStore();
  ~MappingStore();
  MappingStore(MappingStore&&) noexcept;
  MappingStore& operator=(MappingStore&&) noexcept;

  // Stores (coord_id, enc_value) -> orig_value. Re-recording the same triple
  // is a no-op returning kFresh; recording a different original under an
  // existing composite key throws IntegrityError.
  //
  // Returns kConflict, and bumps the kind's counter, when this call adds a
  // new distinct original to an enc value that already had one. The counter
  // therefore equals sum over enc values of (distinct originals - 1).
  RecordOutcome Record(ComponentKind kind, std::uint64_t coord_id,
                       std::uint64_t enc_value, std::uint64_t orig_value,
                       int frac_digits = 0);

  std::optional<std::uint64_t> LookupExact(ComponentKind kind,
                                           std::uint64_t coord_id,
                                           std::uint64_t enc_value) const;

  FuzzyResult LookupFuzzy(ComponentKind kind, std::uint64_t enc_value) const;

  std::uint64_t ConflictCount(ComponentKind kind) const;
  ConflictRate GetConflictRate(ComponentKind kind) const;
  std::size_t size(ComponentKind kind) const;
  std::size_t size() const;

  // All entries sorted by (kind, coord_id, enc_value).
  std::vector<Entry> Entries() const;

  // Binary "GFPEMAP1" file; see README for the layout. Entries are written in
  // canonical order so equal stores produce identical bytes.
  void Save(const std::filesystem::path& path) const;
  static MappingStore Load(const std::filesystem::path& path);

  // Audit CSV: kind,coord_id,enc_value,orig_value.
  void ExportCsv(const std::filesystem::path& path) const;

  friend bool operator==(const MappingStore& a, const MappingStore& b);

 private:
  struct KindTable;
  std::array<std::unique_ptr<KindTable>, 4> tables_;

  KindTable& table(ComponentKind kind) const;
};

}  // namespace geofpe

#endif  // GEOFPE_MAPPING_STORE_H_
