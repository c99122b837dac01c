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

#include "cli_util.h"

#include <openssl/rand.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <string>

#include "geofpe/errors.h"

namespace geofpe::cli {
namespace {

namespace fs = std::filesystem;

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open key file " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MasterKey FromRaw(const std::string& data) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(data.data());
  return MasterKey::FromBytes({p, data.size()});
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseNumber(std::string_view s) {
  s = Trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string> FileNames(const fs::path& dir) {
  std::vector<std::string> names;
  for (const auto& p : ListTrajectoryFiles(dir)) {
    names.push_back(p.filename().string());
  }
  return names;
}

}  // namespace

MasterKey ReadKeyFile(const fs::path& path) {
  const std::string data = ReadAll(path);
  const std::string ext = path.extension().string();
  if (ext == ".hex") return MasterKey::FromHex(data);
  if (ext == ".key") return FromRaw(data);
  if (data.size() == kMasterKeyBytes) return FromRaw(data);
  return MasterKey::FromHex(data);
}

MasterKey WriteNewKey(const fs::path& path, bool hex, bool force) {
  if (!force && fs::exists(path)) {
    throw Error(path.string() + " exists; pass --force to overwrite");
  }
  MasterKey::Bytes bytes{};
  if (RAND_bytes(bytes.data(), static_cast<int>(bytes.size())) != 1) {
    throw Error("system entropy source unavailable");
  }
  const MasterKey key(bytes);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  if (hex) {
    out << key.ToHex() << '\n';
  } else {
    out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  }
  if (!out) throw Error("failed writing " + path.string());
  return key;
}

std::vector<LonLat> ParseCenters(std::string_view text) {
  std::vector<LonLat> centers;
  if (Trim(text).empty()) return centers;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = Trim(text.substr(start, end - start));
    const std::size_t comma = item.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("center '" + std::string(item) + "' is not lon,lat");
    }
    centers.push_back(
        {ParseNumber(item.substr(0, comma)), ParseNumber(item.substr(comma + 1))});
    start = end + 1;
  }
  return centers;
}

std::pair<std::vector<Trajectory>, std::vector<Trajectory>> LoadAligned(
    const fs::path& a, const fs::path& b) {
  const auto names_a = FileNames(a);
  const auto names_b = FileNames(b);
  if (names_a != names_b) {
    throw DomainError("datasets are not aligned: " + a.string() + " has " +
                      std::to_string(names_a.size()) + " files, " +
                      b.string() + " has " + std::to_string(names_b.size()) +
                      " and the names differ");
  }
  return {LoadTrajectories(a), LoadTrajectories(b)};
}

}  // namespace geofpe::cli
