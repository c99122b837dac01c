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

#include "geofpe/decimal.h"

#include <array>
#include <limits>

#include "geofpe/errors.h"

namespace geofpe {
namespace {

constexpr std::array<std::uint64_t, kMaxFractionDigits + 1> kPow10 = [] {
  std::array<std::uint64_t, kMaxFractionDigits + 1> table{};
  std::uint64_t v = 1;
  for (auto& entry : table) {
    entry = v;
    v *= 10;
  }
  return table;
}();

[[noreturn]] void Fail(std::string_view text, const char* why) {
  throw ParseError("malformed decimal \"" + std::string(text) + "\": " + why);
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::uint64_t Pow10(int digits) {
  if (digits < 0 || digits > kMaxFractionDigits) {
    throw DomainError("Pow10: exponent out of range: " +
                      std::to_string(digits));
  }
  return kPow10[static_cast<std::size_t>(digits)];
}

DecimalNumber Decompose(std::string_view text) {
  DecimalNumber out;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    out.sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }

  const std::size_t int_begin = pos;
  while (pos < text.size() && IsDigit(text[pos])) {
    const auto digit = static_cast<std::uint64_t>(text[pos] - '0');
    if (out.int_part > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
      Fail(text, "integer part overflows 64 bits");
    }
    out.int_part = out.int_part * 10 + digit;
    ++pos;
  }
  const std::size_t int_len = pos - int_begin;
  if (int_len == 0) Fail(text, "missing integer digits");
  if (int_len > 1 && text[int_begin] == '0') Fail(text, "leading zero");

  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t frac_begin = pos;
    while (pos < text.size() && IsDigit(text[pos])) {
      if (pos - frac_begin >= static_cast<std::size_t>(kMaxFractionDigits)) {
        Fail(text, "more than 18 fraction digits");
      }
      out.frac_value = out.frac_value * 10 +
                       static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    out.frac_digits = static_cast<int>(pos - frac_begin);
    if (out.frac_digits == 0) Fail(text, "missing fraction digits after '.'");
  }

  if (pos != text.size()) Fail(text, "unexpected character");
  return out;
}

std::string Recombine(const DecimalNumber& n) {
  std::string out;
  if (n.negative()) out.push_back('-');
  out += std::to_string(n.int_part);
  if (n.frac_digits > 0) {
    std::string frac = std::to_string(n.frac_value);
    out.push_back('.');
    out.append(static_cast<std::size_t>(n.frac_digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

void CheckDecimal(const DecimalNumber& n) {
  if (n.sign != 1 && n.sign != -1) throw DomainError("sign must be +1 or -1");
  if (n.frac_digits < 0 || n.frac_digits > kMaxFractionDigits) {
    throw DomainError("fraction digit count out of range");
  }
  if (n.frac_value >= Pow10(n.frac_digits)) {
    throw DomainError("fraction value " + std::to_string(n.frac_value) +
                      " does not fit in " + std::to_string(n.frac_digits) +
                      " digits");
  }
}

double ToDouble(const DecimalNumber& n) {
  const double magnitude =
      static_cast<double>(n.int_part) +
      static_cast<double>(n.frac_value) /
          static_cast<double>(kPow10[static_cast<std::size_t>(n.frac_digits)]);
  return n.negative() ? -magnitude : magnitude;
}

std::strong_ordering CompareMagnitude(const DecimalNumber& n,
                                      std::uint64_t whole) {
  if (n.int_part != whole) return n.int_part <=> whole;
  return n.frac_value == 0 ? std::strong_ordering::equal
                           : std::strong_ordering::greater;
}

PointValidity ValidatePoint(const GeoPoint& p) {
  if (CompareMagnitude(p.lon, 180) == std::strong_ordering::greater) {
    return PointValidity::kLonOutOfRange;
  }
  if (CompareMagnitude(p.lat, 90) == std::strong_ordering::greater) {
    return PointValidity::kLatOutOfRange;
  }
  return PointValidity::kValid;
}

const char* PointValidityName(PointValidity v) {
  switch (v) {
    case PointValidity::kValid:
      return "valid";
    case PointValidity::kLonOutOfRange:
      return "longitude out of range";
    case PointValidity::kLatOutOfRange:
      return "latitude out of range";
  }
  return "unknown";
}

}  // namespace geofpe
