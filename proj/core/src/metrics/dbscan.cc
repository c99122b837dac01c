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

#include "geofpe/metrics/dbscan.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "geofpe/errors.h"
#include "geofpe/metrics/haversine.h"

namespace geofpe {
namespace {

// Cell side is eps / kCellsPerEps; below eps / sqrt(2) every cell has a
// diameter under eps.
constexpr double kCellsPerEps = 1.5;
constexpr std::int64_t kReach = 2;  // ceil(kCellsPerEps)

struct Cell {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    return static_cast<std::size_t>(
        (static_cast<std::uint64_t>(c.x) * 0x9E3779B97F4A7C15ULL) ^
        static_cast<std::uint64_t>(c.y));
  }
};

struct Group {
  std::vector<std::size_t> members;  // ascending
  std::vector<std::size_t> cores;    // ascending
  std::vector<std::size_t> near;     // groups that may hold neighbors
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

class Space {
 public:
  Space(std::span<const LonLat> points, double eps, DistanceMetric metric)
      : points_(points),
        eps_(eps),
        eps2_(eps * eps),
        metric_(metric),
        group_of_(points.size(), 0) {
    if (metric_ == DistanceMetric::kHaversineKm) {
      // One group, no diameter guarantee.
      compact_ = false;
      groups_.resize(1);
      groups_[0].members.resize(points.size());
      std::iota(groups_[0].members.begin(), groups_[0].members.end(),
                std::size_t{0});
      groups_[0].near = {0};
      return;
    }
    compact_ = true;
    const double side = eps / kCellsPerEps;
    std::unordered_map<Cell, std::size_t, CellHash> ids;
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Cell c{static_cast<std::int64_t>(std::floor(points[i].lon / side)),
                   static_cast<std::int64_t>(std::floor(points[i].lat / side))};
      auto [it, fresh] = ids.try_emplace(c, groups_.size());
      if (fresh) {
        groups_.emplace_back();
        cells.push_back(c);
      }
      groups_[it->second].members.push_back(i);
      group_of_[i] = it->second;
    }
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (std::int64_t dx = -kReach; dx <= kReach; ++dx) {
        for (std::int64_t dy = -kReach; dy <= kReach; ++dy) {
          auto it = ids.find(Cell{cells[g].x + dx, cells[g].y + dy});
          if (it != ids.end()) groups_[g].near.push_back(it->second);
        }
      }
      std::sort(groups_[g].near.begin(), groups_[g].near.end());
    }
  }

  bool Within(std::size_t i, std::size_t j) const {
    const LonLat& a = points_[i];
    const LonLat& b = points_[j];
    if (metric_ == DistanceMetric::kHaversineKm) {
      return HaversineKm(a, b) <= eps_;
    }
    const double dx = a.lon - b.lon;
    const double dy = a.lat - b.lat;
    return dx * dx + dy * dy <= eps2_;
  }

  bool compact() const { return compact_; }
  std::vector<Group>& groups() { return groups_; }
  std::size_t group_of(std::size_t i) const { return group_of_[i]; }

 private:
  std::span<const LonLat> points_;
  double eps_;
  double eps2_;
  DistanceMetric metric_;
  bool compact_ = false;
  std::vector<Group> groups_;
  std::vector<std::size_t> group_of_;
};

}  // namespace

std::vector<int> Dbscan(std::span<const LonLat> points, double eps,
                        std::size_t min_pts, DistanceMetric metric) {
  if (!(eps > 0.0)) throw DomainError("DBSCAN eps must be positive");
  if (min_pts < 1) throw DomainError("DBSCAN min_pts must be >= 1");

  Space space(points, eps, metric);
  auto& groups = space.groups();
  std::vector<bool> core(points.size(), false);

  // Core flags, counting neighbors only up to min_pts.
  for (auto& g : groups) {
    if (space.compact() && g.members.size() >= min_pts) {
      for (std::size_t i : g.members) core[i] = true;
    } else {
      for (std::size_t i : g.members) {
        std::size_t count = 0;
        for (std::size_t h : g.near) {
          for (std::size_t j : groups[h].members) {
            if (space.Within(i, j) && ++count >= min_pts) break;
          }
          if (count >= min_pts) break;
        }
        core[i] = count >= min_pts;
      }
    }
    for (std::size_t i : g.members) {
      if (core[i]) g.cores.push_back(i);
    }
  }

  // Density connectivity among core points.
  DisjointSets sets(points.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& a = groups[g].cores;
    if (a.empty()) continue;
    if (space.compact()) {
      for (std::size_t k = 1; k < a.size(); ++k) sets.Union(a[0], a[k]);
    } else {
      for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = x + 1; y < a.size(); ++y) {
          if (space.Within(a[x], a[y])) sets.Union(a[x], a[y]);
        }
      }
    }
    for (std::size_t h : groups[g].near) {
      if (h <= g) continue;
      const auto& b = groups[h].cores;
      if (b.empty() || sets.Find(a[0]) == sets.Find(b[0])) continue;
      bool linked = false;
      for (std::size_t i : a) {
        for (std::size_t j : b) {
          if (space.Within(i, j)) {
            sets.Union(i, j);
            linked = true;
            break;
          }
        }
        if (linked) break;
      }
    }
  }

  // Clusters numbered by their first core point in input order.
  std::vector<int> labels(points.size(), kNoise);
  std::vector<int> root_label(points.size(), kNoise);
  int next_cluster = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!core[i]) continue;
    const std::size_t r = sets.Find(i);
    if (root_label[r] == kNoise) root_label[r] = next_cluster++;
    labels[i] = root_label[r];
  }

  // Border points join the lowest-numbered cluster that reaches them.
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (core[i]) continue;
    int best = std::numeric_limits<int>::max();
    for (std::size_t h : groups[space.group_of(i)].near) {
      for (std::size_t c : groups[h].cores) {
        if (labels[c] < best && space.Within(i, c)) best = labels[c];
      }
    }
    if (best != std::numeric_limits<int>::max()) labels[i] = best;
  }
  return labels;
}

std::vector<Cluster> SummarizeClusters(std::span<const LonLat> points,
                                       std::span<const int> labels) {
  int max_label = -1;
  for (int l : labels) max_label = std::max(max_label, l);
  std::vector<Cluster> clusters(static_cast<std::size_t>(max_label + 1));
  std::vector<double> sum_lon(clusters.size(), 0.0);
  std::vector<double> sum_lat(clusters.size(), 0.0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) continue;
    const auto c = static_cast<std::size_t>(labels[i]);
    ++clusters[c].size;
    sum_lon[c] += points[i].lon;
    sum_lat[c] += points[i].lat;
  }
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    clusters[c].label = static_cast<int>(c);
    if (clusters[c].size > 0) {
      const auto n = static_cast<double>(clusters[c].size);
      clusters[c].centroid = {sum_lon[c] / n, sum_lat[c] / n};
    }
  }
  return clusters;
}

}  // namespace geofpe
