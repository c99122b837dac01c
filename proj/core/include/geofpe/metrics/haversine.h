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

#ifndef GEOFPE_METRICS_HAVERSINE_H_
#define GEOFPE_METRICS_HAVERSINE_H_

#include "geofpe/lonlat.h"

namespace geofpe {

// Mean Earth radius.
inline constexpr double kEarthRadiusKm = 6371.0;

// Great-circle distance in km between two positions given in degrees:
//   2R asin(sqrt(sin^2(dphi/2) + cos(phi1) cos(phi2) sin^2(dlambda/2)))
double HaversineKm(const LonLat& a, const LonLat& b,
                   double radius_km = kEarthRadiusKm);

inline double HaversineKm(const GeoPoint& a, const GeoPoint& b) {
  return HaversineKm(ToLonLat(a), ToLonLat(b));
}

// Plane distance in degree space.
double EuclideanDegrees(const LonLat& a, const LonLat& b);

}  // namespace geofpe

#endif  // GEOFPE_METRICS_HAVERSINE_H_
