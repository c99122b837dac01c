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

#ifndef GEOFPE_METRICS_DBSCAN_H_
#define GEOFPE_METRICS_DBSCAN_H_

#include <cstddef>
#include <span>
#include <vector>

#include "geofpe/lonlat.h"

namespace geofpe {

enum class DistanceMetric { kEuclideanDegrees, kHaversineKm };

inline constexpr int kNoise = -1;

// DBSCAN. A point is core when at least `min_pts` points, itself included,
// lie within `eps` (inclusive). Clusters are numbered 0, 1, ... in the order
// their first core point appears in the input; a border point reachable from
// several clusters joins the one numbered first. Points in no cluster get
// kNoise.
//
// Euclidean runs use a grid of cells small enough that any two points of a
// cell are neighbors; haversine runs compare all pairs.
std::vector<int> Dbscan(std::span<const LonLat> points, double eps,
                        std::size_t min_pts,
                        DistanceMetric metric = DistanceMetric::kEuclideanDegrees);

struct Cluster {
  int label = 0;
  LonLat centroid;  // arithmetic mean in degrees
  std::size_t size = 0;
};

// Number of clusters is labels' max + 1.
std::vector<Cluster> SummarizeClusters(std::span<const LonLat> points,
                                       std::span<const int> labels);

}  // namespace geofpe

#endif  // GEOFPE_METRICS_DBSCAN_H_
