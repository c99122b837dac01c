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

#ifndef GEOFPE_PIPELINE_H_
#define GEOFPE_PIPELINE_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "geofpe/cipher.h"
#include "geofpe/mapping_store.h"
#include "geofpe/sm4_key_schedule.h"

namespace geofpe {

struct FileSummary {
  std::string file_name;
  std::size_t records = 0;   // records written
  std::size_t errors = 0;    // entries in the sidecar
};

struct EncryptSummary {
  std::size_t files = 0;
  std::size_t records_in = 0;      // parsed lines
  std::size_t records_out = 0;     // encrypted lines written
  std::size_t parse_errors = 0;
  std::size_t dropped_invalid = 0;
  std::size_t passthrough = 0;     // integer parts outside every range class
  std::array<std::uint64_t, 4> conflicts{};  // indexed by ComponentKind
  std::array<MappingStore::ConflictRate, 4> conflict_rates{};
  double elapsed_seconds = 0.0;
  std::vector<FileSummary> per_file;
};

struct DecryptSummary {
  std::size_t files = 0;
  std::size_t records = 0;          // encrypted lines read
  std::size_t restored = 0;         // plaintext lines written
  std::size_t failures = 0;         // unrecoverable lines
  std::size_t fuzzy_recoveries = 0; // components restored via the fallback
  double elapsed_seconds = 0.0;
  std::vector<FileSummary> per_file;

  bool ok() const { return failures == 0; }
};

struct PipelineOptions {
  CipherParams params;
  int workers = 1;
};

// Encrypts every *.txt trajectory file of `input_dir` into `output_dir`
// (same file names, "coord_id,id,datetime,enc_lon,enc_lat"), recording every
// component in `store`. Coordinate ids are assigned sequentially in (file
// name, line) order after cleaning, so the output does not depend on the
// worker count. Parse failures and dropped points go to "<file>.errors".
EncryptSummary EncryptDataset(const std::filesystem::path& input_dir,
                              const std::filesystem::path& output_dir,
                              const MasterKey& key,
                              const PipelineOptions& options,
                              MappingStore& store);

// Restores the original 4-column files. Each component is looked up by its
// composite key, falling back to the enc-value index when the exact key is
// missing; the recovered plaintext is re-encrypted with `key` and must
// reproduce the ciphertext. Unrecoverable lines are listed in
// "<file>.errors" and the rest of the file is still written.
DecryptSummary DecryptDataset(const std::filesystem::path& encrypted_dir,
                              const std::filesystem::path& output_dir,
                              const MasterKey& key,
                              const PipelineOptions& options,
                              const MappingStore& store);

}  // namespace geofpe

#endif  // GEOFPE_PIPELINE_H_
