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

#ifndef GEOFPE_TOOLS_CLI_UTIL_H_
#define GEOFPE_TOOLS_CLI_UTIL_H_

#include <filesystem>
#include <string_view>
#include <utility>
#include <vector>

#include "geofpe/dataset.h"
#include "geofpe/lonlat.h"
#include "geofpe/sm4_key_schedule.h"

namespace geofpe::cli {

// ".hex" files hold 32 hex digits, ".key" files 16 raw bytes. Any other
// extension is accepted in either form, decided by content.
MasterKey ReadKeyFile(const std::filesystem::path& path);

// Writes 16 bytes from the system entropy source. Refuses to replace an
// existing file unless `force` is set.
MasterKey WriteNewKey(const std::filesystem::path& path, bool hex, bool force);

// "lon,lat;lon,lat;..." (whitespace around items ignored). Throws
// ParseError on malformed input.
std::vector<LonLat> ParseCenters(std::string_view text);

// Loads two directories whose trajectory files must pair up by file name.
std::pair<std::vector<Trajectory>, std::vector<Trajectory>> LoadAligned(
    const std::filesystem::path& a, const std::filesystem::path& b);

}  // namespace geofpe::cli

#endif  // GEOFPE_TOOLS_CLI_UTIL_H_
