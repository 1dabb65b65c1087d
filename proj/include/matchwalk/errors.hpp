// Copyright 2026 The matchwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace matchwalk {

// Precondition violations (bad widths, malformed gates, out-of-range
// parameters) are reported with std::invalid_argument / std::out_of_range.
// The two classes below exist so that the CLI can map them to distinct exit
// codes.

/// Raised when a dense computation would exceed a resource cap
/// (operator dimension, Pauli enumeration size).
class NumericalGuardError : public std::runtime_error {
 public:
  explicit NumericalGuardError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Raised on file-system or parse failures; the message names the path.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace matchwalk
