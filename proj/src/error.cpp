// Copyright 2026 The palettekit Authors
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
#include "palettekit/error.hpp"

namespace palettekit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput: return "MalformedInput";
    case ErrorKind::kLoopRejected: return "LoopRejected";
    case ErrorKind::kResourceLimit: return "ResourceLimit";
    case ErrorKind::kImproperColoring: return "ImproperColoring";
    case ErrorKind::kNotTwoPalettes: return "NotTwoPalettes";
    case ErrorKind::kNonMinimalColoring: return "NonMinimalColoring";
    case ErrorKind::kTooManyPalettes: return "TooManyPalettes";
    case ErrorKind::kInvalidCertificate: return "InvalidCertificate";
    case ErrorKind::kNotRegular: return "NotRegular";
    case ErrorKind::kNotCubic: return "NotCubic";
    case ErrorKind::kNotConnected: return "NotConnected";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace palettekit
