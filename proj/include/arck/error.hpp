/*
 * Copyright 2026 The arck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arck {

enum class ErrorCode {
    SelfLoop,
    ParallelEdge,
    DanglingEndpoint,
    DuplicateId,
    MissingCoordinate,
    ParseError,
    IllegalMove,
    IllegalFlip,
    BudgetExceeded,
    NegativeLiteral,
    EmptyClause,
    AlreadyAssigned,
    Incomplete,
    NotACompiledInstance,
    UndefinedTemplate,
    NonBasisVertex,
    NotPlanarEmbedding,
    OddVariableCount,
    PortMismatch,
    ArityMismatch,
    SearchBudgetExceeded,
};

std::string_view to_string(ErrorCode code);

/**
 * Domain error carrying a machine-readable code. The message names the
 * offending element (vertex, edge, literal, ...).
 */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::MissingCoordinate: return "MissingCoordinate";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::IllegalFlip: return "IllegalFlip";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NegativeLiteral: return "NegativeLiteral";
    case ErrorCode::EmptyClause: return "EmptyClause";
    case ErrorCode::AlreadyAssigned: return "AlreadyAssigned";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::NotACompiledInstance: return "NotACompiledInstance";
    case ErrorCode::UndefinedTemplate: return "UndefinedTemplate";
    case ErrorCode::NonBasisVertex: return "NonBasisVertex";
    case ErrorCode::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case ErrorCode::OddVariableCount: return "OddVariableCount";
    case ErrorCode::PortMismatch: return "PortMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    }
    return "Unknown";
}

} // namespace arck
