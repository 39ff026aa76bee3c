// Copyright 2026 The pmcover Authors.
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

#include "pmcover/error.h"

namespace pmcover {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedGraph6: return "MalformedGraph6";
    case ErrorCode::kNotCubic: return "NotCubic";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kEmptySide: return "EmptySide";
    case ErrorCode::kGraphTooLarge: return "GraphTooLarge";
    case ErrorCode::kNoAdmissibleMatching: return "NoAdmissibleMatching";
    case ErrorCode::kNotAFractionalPM: return "NotAFractionalPM";
    case ErrorCode::kInfeasibleDecomposition: return "InfeasibleDecomposition";
    case ErrorCode::kInvariantBroken: return "InvariantBroken";
    case ErrorCode::kNotBridgeless: return "NotBridgeless";
    case ErrorCode::kTooManyMatchings: return "TooManyMatchings";
  }
  return "Unknown";
}

}  // namespace pmcover
