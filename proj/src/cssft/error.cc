// Copyright 2026 The cssft Authors
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

#include "cssft/error.h"

namespace cssft {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::InvalidParameters:
            return "InvalidParameters";
        case ErrorCode::DimensionTooLarge:
            return "DimensionTooLarge";
        case ErrorCode::NotDualContaining:
            return "NotDualContaining";
        case ErrorCode::SingularDDT:
            return "SingularDDT";
        case ErrorCode::WeightCongruenceViolated:
            return "WeightCongruenceViolated";
        case ErrorCode::LemmaUnsupported:
            return "LemmaUnsupported";
        case ErrorCode::UnsupportedOnState:
            return "UnsupportedOnState";
        case ErrorCode::Infeasible:
            return "Infeasible";
        case ErrorCode::Io:
            return "Io";
        case ErrorCode::Parse:
            return "Parse";
        case ErrorCode::CheckFailed:
            return "CheckFailed";
        case ErrorCode::Internal:
            return "Internal";
    }
    return "Unknown";
}

}  // namespace cssft
