// Copyright 2026 The dpident Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPIDENT_SRC_ERRORS_H_
#define DPIDENT_SRC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dpident {

// Error categories thrown by the core library. The C API maps these 1:1 onto
// dpi_status values; the CLI maps them onto exit codes.
enum class ErrorCode {
  kInvalidArgument,
  kInvalidEpsilon,
  kInvalidSensitivity,
  kValueNotInUniverse,
  kRemovalWouldEmpty,
  kUniverseTooLarge,
  kSampleTooSmall,
  kEmptyAfterFilter,
  kColumnNotFound,
  kParseError,
  kIoError,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

class DpError : public std::runtime_error {
 public:
  DpError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dpident

#endif  // DPIDENT_SRC_ERRORS_H_
