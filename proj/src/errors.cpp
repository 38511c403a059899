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

#include "errors.hpp"

namespace dpident {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvalidEpsilon:
      return "InvalidEpsilon";
    case ErrorCode::kInvalidSensitivity:
      return "InvalidSensitivity";
    case ErrorCode::kValueNotInUniverse:
      return "ValueNotInUniverse";
    case ErrorCode::kRemovalWouldEmpty:
      return "RemovalWouldEmpty";
    case ErrorCode::kUniverseTooLarge:
      return "UniverseTooLarge";
    case ErrorCode::kSampleTooSmall:
      return "SampleTooSmall";
    case ErrorCode::kEmptyAfterFilter:
      return "EmptyAfterFilter";
    case ErrorCode::kColumnNotFound:
      return "ColumnNotFound";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

}  // namespace dpident
