// Copyright 2026 The cwsgraph Authors
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

#ifndef CWSGRAPH_ERRORS_HPP
#define CWSGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cwsgraph {

enum class ErrorCode {
    InvalidArgument,
    LengthMismatch,
    RankDeficient,
    DegreeOutOfRange,
    LogOfZero,
    NotFound,
    DegenerateSide,
    CapTooLargeForBudget,
    BadAlpha,
    BudgetExceeded,
    DimensionMismatch,
    NotRegular,
    IndexOutOfRange,
    TooManyQubits,
    NotSystematic,
    NotProductState,
    NotInCodespace,
    NotSeparable,
    PreconditionUZA,
    ImpossibleOutcome,
    ParseError,
};

inline constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::LogOfZero: return "LogOfZero";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::DegenerateSide: return "DegenerateSide";
        case ErrorCode::CapTooLargeForBudget: return "CapTooLargeForBudget";
        case ErrorCode::BadAlpha: return "BadAlpha";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::TooManyQubits: return "TooManyQubits";
        case ErrorCode::NotSystematic: return "NotSystematic";
        case ErrorCode::NotProductState: return "NotProductState";
        case ErrorCode::NotInCodespace: return "NotInCodespace";
        case ErrorCode::NotSeparable: return "NotSeparable";
        case ErrorCode::PreconditionUZA: return "PreconditionUZA";
        case ErrorCode::ImpossibleOutcome: return "ImpossibleOutcome";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string &message) {
    if (!condition) {
        fail(code, message);
    }
}

}  // namespace cwsgraph

#endif
