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

#ifndef GEOFPE_METRICS_REPORT_H_
#define GEOFPE_METRICS_REPORT_H_

#include <filesystem>

#include <nlohmann/json.hpp>

#include "geofpe/metrics/accuracy.h"
#include "geofpe/metrics/hotspot.h"
#include "geofpe/metrics/rdr.h"
#include "geofpe/pipeline.h"

namespace geofpe {

// JSON field names mirror the C++ member names.
nlohmann::json ToJson(const RdrReport& r);
nlohmann::json ToJson(const RdrSummary& s);
nlohmann::json ToJson(const HotspotReport& r);
nlohmann::json ToJson(const AccuracyReport& r);
nlohmann::json ToJson(const EncryptSummary& s);
nlohmann::json ToJson(const DecryptSummary& s);

// Pretty-printed with a trailing newline.
void WriteJson(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json ReadJson(const std::filesystem::path& path);

// "lo,hi,count" rows.
void WriteHistogramCsv(const std::filesystem::path& path,
                       const RdrSummary& s);
// "value,fraction" rows.
void WriteCdfCsv(const std::filesystem::path& path, const RdrSummary& s);

}  // namespace geofpe

#endif  // GEOFPE_METRICS_REPORT_H_
