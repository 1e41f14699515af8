// Copyright 2026 The unimeas Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace unimeas {

enum class ErrorCode {
    kInvalidArgument,
    kUnknownLabel,
    kDuplicateLabel,
    kBadAmplitude,
    kRegisterMismatch,
    kNotUnitary,
    kNotGhz,
    kObserverNotReady,
    kNoLedgerValue,
    kSizeCap,
    kSyntax,
    kSchema,
};

/// Stable identifier printed by the CLI, e.g. "unknown_label".
const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }
    /// what() without the leading error code name.
    const std::string &message() const noexcept {
        return message_;
    }

   private:
    ErrorCode code_;
    std::string message_;
};

}  // namespace unimeas
