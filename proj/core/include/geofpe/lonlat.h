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

#ifndef GEOFPE_LONLAT_H_
#define GEOFPE_LONLAT_H_

#include "geofpe/decimal.h"

namespace geofpe {

// Floating-point position in degrees, for metrics and data synthesis.
struct LonLat {
  double lon = 0.0;
  double lat = 0.0;

  friend bool operator==(const LonLat&, const LonLat&) = default;
};

inline LonLat ToLonLat(const GeoPoint& p) {
  return {ToDouble(p.lon), ToDouble(p.lat)};
}

struct BoundingBox {
  double min_lon = 116.0;
  double max_lon = 117.0;
  double min_lat = 39.6;
  double max_lat = 40.4;
};

}  // namespace geofpe

#endif  // GEOFPE_LONLAT_H_
