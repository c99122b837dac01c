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

#ifndef GEOFPE_ERRORS_H_
#define GEOFPE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace geofpe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed decimal text or trajectory line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A value outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Contradictory re-insertion into the mapping store. Signals a pipeline bug.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A mapping-store file that cannot be loaded.
class StoreFormatError : public Error {
 public:
  enum class Reason { kBadMagic, kVersionMismatch, kTruncated, kChecksum, kCorrupt };

  StoreFormatError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

}  // namespace geofpe

#endif  // GEOFPE_ERRORS_H_
