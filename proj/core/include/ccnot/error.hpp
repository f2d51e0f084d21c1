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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccnot {

/// Stable machine-readable error codes. The CLI prints `error_name(code)`.
enum class ErrorCode {
    Syntax,
    ControlEqualsTarget,
    WireOutOfRange,
    EmptyWire,
    EmptyCutSet,
    NoRadialCut,
    DuplicateCut,
    UnknownGap,
    UnpinnedSelector,
    Underdetermined,
    Inconsistent,
    NotAdjacent,
    BudgetTooSmall,
    IndexOutOfRange,
    SizeMismatch,
    ShapeMismatch,
    ZeroProbabilityOutcome,
    TooManyQubits,
    CountMismatch,
    InvalidAncillaConfig,
    UnknownGate,
    MissingBinding,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace ccnot
