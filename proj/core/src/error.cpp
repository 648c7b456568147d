// Copyright 2026 The latkit Authors
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

#include <latkit/error.hpp>

namespace latkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::CycleDetected:
    return "CycleDetected";
  case ErrorCode::NotALattice:
    return "NotALattice";
  case ErrorCode::NoBounds:
    return "NoBounds";
  case ErrorCode::TrivialLattice:
    return "TrivialLattice";
  case ErrorCode::InvalidInput:
    return "InvalidInput";
  case ErrorCode::ParseError:
    return "ParseError";
  case ErrorCode::InvalidParameter:
    return "InvalidParameter";
  case ErrorCode::SizeCapExceeded:
    return "SizeCapExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

} // namespace latkit
