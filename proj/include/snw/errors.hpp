/*
   Copyright 2026 The snw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snw {

enum class ErrorCode {
  DimensionError,
  InvalidArgument,
  InFError,
  SupportError,
  SingularFactor,
  NotUnit,
  NotRepresentable,
  NotPolynomial,
  NotLaurentMonomial,
  NotInIdeal,
  NoSolution,
  NotOneDimensional,
  WindowCapExceeded,
  InvalidEndo,
  BoundExceeded,
  NotGeneric,
  InvalidDescriptor,
  NameError,
  TypeError,
};

std::string_view error_name(ErrorCode code);

/// Every library failure is reported through this type; code() is stable and
/// is what the CLI prints as the error kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace snw
