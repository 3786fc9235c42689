// Copyright 2026 The qeu Authors.
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
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qeu {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    NonUnitState,
    NotHermitian,
    NotProjector,
    InvalidMeasure,
    InvalidUtility,
    ContradictoryStatements,
    ZeroProbabilityOutcome,
    NonDiagonalAct,
    InfeasibleRate,
    PhaseConventionInvalid,
    NoCrossover,
    EmptyDataset,
    MalformedInput,
    DuplicateRespondent,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonUnitState: return "NonUnitState";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotProjector: return "NotProjector";
    case ErrorCode::InvalidMeasure: return "InvalidMeasure";
    case ErrorCode::InvalidUtility: return "InvalidUtility";
    case ErrorCode::ContradictoryStatements: return "ContradictoryStatements";
    case ErrorCode::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
    case ErrorCode::NonDiagonalAct: return "NonDiagonalAct";
    case ErrorCode::InfeasibleRate: return "InfeasibleRate";
    case ErrorCode::PhaseConventionInvalid: return "PhaseConventionInvalid";
    case ErrorCode::NoCrossover: return "NoCrossover";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DuplicateRespondent: return "DuplicateRespondent";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace qeu
