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

#ifndef GEOFPE_SM4_KEY_SCHEDULE_H_
#define GEOFPE_SM4_KEY_SCHEDULE_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace geofpe {

inline constexpr std::size_t kMasterKeyBytes = 16;
inline constexpr std::size_t kRoundKeyCount = 32;

// 128-bit secret.
class MasterKey {
 public:
  using Bytes = std::array<std::uint8_t, kMasterKeyBytes>;

  MasterKey() = default;
  explicit MasterKey(const Bytes& bytes) : bytes_(bytes) {}

  // Throws DomainError unless exactly 16 bytes are given.
  static MasterKey FromBytes(std::span<const std::uint8_t> bytes);
  // 32 hex digits, case-insensitive, surrounding whitespace ignored.
  static MasterKey FromHex(std::string_view hex);

  const Bytes& bytes() const { return bytes_; }
  std::string ToHex() const;

  friend bool operator==(const MasterKey&, const MasterKey&) = default;

 private:
  Bytes bytes_{};
};

using RoundKeySchedule = std::array<std::uint32_t, kRoundKeyCount>;

// SM4 key expansion (GB/T 32907-2016): FK whitening, CK constants and the
// T' transform (S-box followed by L'(B) = B ^ (B <<< 13) ^ (B <<< 23)).
RoundKeySchedule DeriveRoundKeys(const MasterKey& key);

}  // namespace geofpe

#endif  // GEOFPE_SM4_KEY_SCHEDULE_H_
