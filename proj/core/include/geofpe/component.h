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

#ifndef GEOFPE_COMPONENT_H_
#define GEOFPE_COMPONENT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace geofpe {

// The four independently encrypted parts of a coordinate pair.
enum class ComponentKind : std::uint8_t {
  kLonInt = 0,
  kLonFrac = 1,
  kLatInt = 2,
  kLatFrac = 3,
};

inline constexpr std::array<ComponentKind, 4> kAllComponentKinds = {
    ComponentKind::kLonInt, ComponentKind::kLonFrac, ComponentKind::kLatInt,
    ComponentKind::kLatFrac};

constexpr bool IsLongitude(ComponentKind k) {
  return k == ComponentKind::kLonInt || k == ComponentKind::kLonFrac;
}

constexpr bool IsIntegerPart(ComponentKind k) {
  return k == ComponentKind::kLonInt || k == ComponentKind::kLatInt;
}

// "lon_int", "lon_frac", "lat_int", "lat_frac". These strings are part of the
// tweak input and of every report, so they must not change.
constexpr std::string_view ComponentTag(ComponentKind k) {
  switch (k) {
    case ComponentKind::kLonInt:
      return "lon_int";
    case ComponentKind::kLonFrac:
      return "lon_frac";
    case ComponentKind::kLatInt:
      return "lat_int";
    case ComponentKind::kLatFrac:
      return "lat_frac";
  }
  return "";
}

std::optional<ComponentKind> ParseComponentTag(std::string_view tag);

}  // namespace geofpe

#endif  // GEOFPE_COMPONENT_H_
