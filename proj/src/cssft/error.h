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

#ifndef _CSSFT_ERROR_H
#define _CSSFT_ERROR_H

#include <stdexcept>
#include <string>

namespace cssft {

/// Failure categories. The numeric values are shared with the C API status
/// codes and the CLI exit codes.
enum class ErrorCode : int {
    InvalidArgument = 1,
    InvalidParameters = 2,
    DimensionTooLarge = 3,
    NotDualContaining = 4,
    SingularDDT = 5,
    WeightCongruenceViolated = 6,
    LemmaUnsupported = 7,
    UnsupportedOnState = 8,
    Infeasible = 9,
    Io = 10,
    Parse = 11,
    CheckFailed = 12,
    Internal = 13,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }
    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace cssft

#endif
