// Copyright 2026 The ccnot Authors
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

#include "ccnot/error.hpp"

namespace ccnot {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Syntax: return "SyntaxError";
        case ErrorCode::ControlEqualsTarget: return "ControlEqualsTarget";
        case ErrorCode::WireOutOfRange: return "WireOutOfRange";
        case ErrorCode::EmptyWire: return "EmptyWire";
        case ErrorCode::EmptyCutSet: return "EmptyCutSet";
        case ErrorCode::NoRadialCut: return "NoRadialCut";
        case ErrorCode::DuplicateCut: return "DuplicateCut";
        case ErrorCode::UnknownGap: return "UnknownGap";
        case ErrorCode::UnpinnedSelector: return "UnpinnedSelector";
        case ErrorCode::Underdetermined: return "Underdetermined";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::NotAdjacent: return "NotAdjacent";
        case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
        case ErrorCode::TooManyQubits: return "TooManyQubits";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::InvalidAncillaConfig: return "InvalidAncillaConfig";
        case ErrorCode::UnknownGate: return "UnknownGate";
        case ErrorCode::MissingBinding: return "MissingBinding";
    }
    return "UnknownError";
}

}  // namespace ccnot
