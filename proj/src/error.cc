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

#include "unimeas/error.h"

namespace unimeas {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return "invalid_argument";
        case ErrorCode::kUnknownLabel:
            return "unknown_label";
        case ErrorCode::kDuplicateLabel:
            return "duplicate_label";
        case ErrorCode::kBadAmplitude:
            return "bad_amplitude";
        case ErrorCode::kRegisterMismatch:
            return "register_mismatch";
        case ErrorCode::kNotUnitary:
            return "not_unitary";
        case ErrorCode::kNotGhz:
            return "not_ghz";
        case ErrorCode::kObserverNotReady:
            return "observer_not_ready";
        case ErrorCode::kNoLedgerValue:
            return "no_ledger_value";
        case ErrorCode::kSizeCap:
            return "size_cap";
        case ErrorCode::kSyntax:
            return "syntax";
        case ErrorCode::kSchema:
            return "schema";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), message_(message) {
}

}  // namespace unimeas
