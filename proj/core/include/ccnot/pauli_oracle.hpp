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

#include <cstddef>
#include <string>
#include <vector>

#include "ccnot/circuit.hpp"
#include "ccnot/stabiliser_map.hpp"

namespace ccnot {

/// Pauli operator with per-qubit X/Z bits; Y is x && z. Sign is +1 or -1.
struct PauliString {
    std::vector<bool> x;
    std::vector<bool> z;
    int sign = 1;

    PauliString() = default;
    explicit PauliString(std::size_t qubits) : x(qubits, false), z(qubits, false) {}

    std::size_t size() const noexcept { return x.size(); }

    static PauliString single(std::size_t qubits, std::size_t q, char op);

    /// e.g. "+XIZ"
    std::string str() const;

    bool operator==(const PauliString &) const = default;
};

/// Conjugation by CNOT: X spreads control -> target, Z spreads target ->
/// control. Throws IndexOutOfRange or ControlEqualsTarget.
PauliString conjugate_cnot(const PauliString &p, std::size_t control, std::size_t target);

/// Fold conjugate_cnot over the gate list. Throws SizeMismatch.
PauliString propagate_pauli(const LinearCircuit &l, const PauliString &p);

/// Map assembled from propagating every single X_q and Z_q input.
StabiliserMap oracle_map(const LinearCircuit &l);

/// Throws ShapeMismatch on differing qubit counts.
bool equivalent_up_to_sign(const StabiliserMap &a, const StabiliserMap &b);

}  // namespace ccnot
