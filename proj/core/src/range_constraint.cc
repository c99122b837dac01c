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

#include "geofpe/range_constraint.h"

#include "geofpe/decimal.h"
#include "geofpe/errors.h"

namespace geofpe {

RangeType ClassifyRange(std::uint64_t value, bool is_lon, bool is_int) {
  if (!is_int) return RangeType::kPassthrough;
  if (is_lon) {
    if (value < 10) return RangeType::kLonUnits;
    if (value < 100) return RangeType::kLonTens;
    if (value <= 180) return RangeType::kLonHundreds;
    return RangeType::kPassthrough;
  }
  if (value < 10) return RangeType::kLatUnits;
  if (value <= 90) return RangeType::kLatTens;
  return RangeType::kPassthrough;
}

std::uint64_t ConstrainRange(std::uint64_t value, RangeType rt) {
  switch (rt) {
    case RangeType::kLonUnits:
    case RangeType::kLatUnits:
      return value % 10;
    case RangeType::kLonTens:
      return 10 + value % 90;
    case RangeType::kLonHundreds:
      return 100 + value % 80;
    case RangeType::kLatTens:
      return 10 + value % 80;
    case RangeType::kPassthrough:
      return value;
  }
  return value;
}

RangeInterval TargetInterval(RangeType rt) {
  switch (rt) {
    case RangeType::kLonUnits:
    case RangeType::kLatUnits:
      return {0, 10};
    case RangeType::kLonTens:
      return {10, 100};
    case RangeType::kLonHundreds:
      return {100, 180};
    case RangeType::kLatTens:
      return {10, 90};
    case RangeType::kPassthrough:
      break;
  }
  throw DomainError("passthrough range type has no target interval");
}

int BitsForDecimalDigits(int digits) {
  const std::uint64_t bound = Pow10(digits);
  int w = 0;
  while (w < 64 && (std::uint64_t{1} << w) < bound) ++w;
  return w;
}

int MaskWidth(std::uint64_t value, bool is_int, int frac_digits) {
  if (is_int) return 16;
  if (value < 100) return 8;
  if (value < 1000) return 10;
  return BitsForDecimalDigits(frac_digits);
}

std::uint64_t ConstrainFraction(std::uint64_t value, int digits) {
  return value % Pow10(digits);
}

}  // namespace geofpe
