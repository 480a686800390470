// Copyright 2026 The oqp developers
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

namespace oqp {

enum class ErrorCode {
    NotHermitian,
    NoConvergence,
    ShapeMismatch,
    DimensionMismatch,
    NotNormalized,
    NotAState,
    NotPiNormal,
    NotSubcentral,
    UnknownLabel,
    NotInAlgebra,
    NotFactorState,
    LabelMismatch,
    UnknownOutcome,
    MppcFailed,
    SyntaxError,
    SemanticError,
    IoError,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotAState: return "NotAState";
        case ErrorCode::NotPiNormal: return "NotPiNormal";
        case ErrorCode::NotSubcentral: return "NotSubcentral";
        case ErrorCode::UnknownLabel: return "UnknownLabel";
        case ErrorCode::NotInAlgebra: return "NotInAlgebra";
        case ErrorCode::NotFactorState: return "NotFactorState";
        case ErrorCode::LabelMismatch: return "LabelMismatch";
        case ErrorCode::UnknownOutcome: return "UnknownOutcome";
        case ErrorCode::MppcFailed: return "MppcFailed";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::SemanticError: return "SemanticError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace oqp
