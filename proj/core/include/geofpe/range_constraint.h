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

#ifndef GEOFPE_RANGE_CONSTRAINT_H_
#define GEOFPE_RANGE_CONSTRAINT_H_

#include <cstdint>

namespace geofpe {

// Digit-class of a coordinate integer part. Fractions, and integers outside
// every class, are kPassthrough.
enum class RangeType : std::uint8_t {
  kPassthrough = 0,
  kLonUnits = 1,     // [0, 10)
  kLonTens = 2,      // [10, 100)
  kLonHundreds = 3,  // [100, 180], 180 included
  kLatUnits = 4,     // [0, 10)
  kLatTens = 5,      // [10, 90], 90 included
};

RangeType ClassifyRange(std::uint64_t value, bool is_lon, bool is_int);

// Maps any post-cipher value into the interval paired with `rt`:
//   units -> v mod 10, lon tens -> 10 + v mod 90, lon hundreds -> 100 + v mod 80,
//   lat tens -> 10 + v mod 80, passthrough -> v.
std::uint64_t ConstrainRange(std::uint64_t value, RangeType rt);

// Half-open target interval [lo, hi) of ConstrainRange for rt != passthrough.
struct RangeInterval {
  std::uint64_t lo;
  std::uint64_t hi;
};
RangeInterval TargetInterval(RangeType rt);

// Bit width of the in-round mask. Integer parts always use 16 bits. Fractions
// use 8 bits below 100, 10 bits below 1000, and otherwise the smallest width
// covering every `frac_digits`-digit value.
int MaskWidth(std::uint64_t value, bool is_int, int frac_digits);

// Smallest w with 2^w >= 10^digits.
int BitsForDecimalDigits(int digits);

// v mod 10^digits (0 when digits == 0).
std::uint64_t ConstrainFraction(std::uint64_t value, int digits);

}  // namespace geofpe

#endif  // GEOFPE_RANGE_CONSTRAINT_H_
