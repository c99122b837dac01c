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

#ifndef GEOFPE_RANDOM_H_
#define GEOFPE_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace geofpe {

// Seeded generator plus distribution helpers whose output is fixed by the
// algorithm here rather than by the standard library in use, so seeded
// outputs match across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, n), n > 0, by rejection.
  std::uint64_t Below(std::uint64_t n);

  // Uniform in [0, 1) with 53 random bits.
  double Uniform();

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Standard normal (Box-Muller, no caching).
  double Normal();

  double Normal(double mean, double stddev) { return mean + stddev * Normal(); }

 private:
  std::mt19937_64 engine_;
};

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view data);

}  // namespace geofpe

#endif  // GEOFPE_RANDOM_H_
