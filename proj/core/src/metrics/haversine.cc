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

#include "geofpe/metrics/haversine.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geofpe {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

double HaversineKm(const LonLat& a, const LonLat& b, double radius_km) {
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double s_phi = std::sin((phi2 - phi1) / 2.0);
  const double s_lambda = std::sin((b.lon - a.lon) * kDegToRad / 2.0);
  const double h =
      s_phi * s_phi + std::cos(phi1) * std::cos(phi2) * s_lambda * s_lambda;
  // Rounding can push h a hair past 1 for antipodal points.
  return 2.0 * radius_km * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

double EuclideanDegrees(const LonLat& a, const LonLat& b) {
  return std::hypot(a.lon - b.lon, a.lat - b.lat);
}

}  // namespace geofpe
