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

#ifndef GEOFPE_DECIMAL_H_
#define GEOFPE_DECIMAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace geofpe {

// Longest fraction we carry; 10^18 still fits in a uint64_t.
inline constexpr int kMaxFractionDigits = 18;

// Exact decimal coordinate split into sign, integer part and fraction digits.
//
// `frac_digits` counts the digits as written, so "39.004" is
// {+1, 39, 4, 3} and "-0.50" is {-1, 0, 50, 2}. The sign is stored apart from
// the magnitude, which keeps "-0.x" representable.
struct DecimalNumber {
  int sign = 1;  // +1 or -1
  std::uint64_t int_part = 0;
  std::uint64_t frac_value = 0;  // < 10^frac_digits
  int frac_digits = 0;

  bool negative() const { return sign < 0; }

  friend bool operator==(const DecimalNumber&, const DecimalNumber&) = default;
};

// 10^digits for digits in [0, kMaxFractionDigits].
std::uint64_t Pow10(int digits);

// Parses "[+-]digits[.digits]". No exponent, no leading zeros on multi-digit
// integer parts, no bare trailing '.'. Throws ParseError naming the input.
DecimalNumber Decompose(std::string_view text);

// Canonical text: no '+' sign, exactly frac_digits fraction digits (left
// zero-padded), no decimal point when frac_digits == 0.
std::string Recombine(const DecimalNumber& n);

// Throws DomainError unless the fields satisfy the type's invariants.
void CheckDecimal(const DecimalNumber& n);

// Nearest double; for distance metrics only, never for round trips.
double ToDouble(const DecimalNumber& n);

// Exact comparison of |n| against a whole number.
std::strong_ordering CompareMagnitude(const DecimalNumber& n,
                                      std::uint64_t whole);

struct GeoPoint {
  DecimalNumber lon;
  DecimalNumber lat;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

enum class PointValidity { kValid, kLonOutOfRange, kLatOutOfRange };

// Longitude must lie in [-180, 180] and latitude in [-90, 90]. Longitude is
// checked first.
PointValidity ValidatePoint(const GeoPoint& p);

const char* PointValidityName(PointValidity v);

}  // namespace geofpe

#endif  // GEOFPE_DECIMAL_H_
