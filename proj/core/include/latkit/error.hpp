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

#ifndef LATKIT_ERROR_HPP
#define LATKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace latkit {

enum class ErrorCode {
  CycleDetected,
  NotALattice,
  NoBounds,
  TrivialLattice,
  InvalidInput,
  ParseError,
  InvalidParameter,
  SizeCapExceeded,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the failure
/// class; what() carries a message naming the offending input.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace latkit

#endif
