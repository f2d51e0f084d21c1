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

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ccnot/icm_circuit.hpp"

namespace ccnot {

using Amplitude = std::complex<double>;
using Qubit1 = std::array<Amplitude, 2>;

inline constexpr std::size_t kMaxStateQubits = 20;

/// Dense state over n qubits; qubit q is bit q of the basis index.
class StateVector {
  public:
    /// |0...0>. Throws TooManyQubits above kMaxStateQubits.
    explicit StateVector(std::size_t qubits);
    static StateVector from_amplitudes(std::vector<Amplitude> amps);

    std::size_t qubit_count() const noexcept { return qubits_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    double norm() const;

    void apply_cnot(std::size_t control, std::size_t target);
    void apply_1q(std::size_t qubit, const std::array<Amplitude, 4> &u);

    /// Contract qubit `q` with <bra|, dropping it from the register. The result
    /// is left unnormalised.
    StateVector contract(std::size_t q, const Qubit1 &bra) const;

    /// Product state from per-qubit states.
    static StateVector product(std::span<const Qubit1> states);

    std::string dump() const;

  private:
    std::size_t qubits_;
    std::vector<Amplitude> amps_;
};

/// |<a|b>|^2 for normalised states.
double fidelity(const StateVector &a, const StateVector &b);

/// Normalised single-qubit states.
Qubit1 init_state(InitBasis::Kind kind);
/// Eigenstate for outcome 0 (the state itself) or 1 (its orthogonal partner).
Qubit1 measurement_state(Basis b, int outcome);

using Bindings = std::map<std::string, Qubit1>;

/// Initialise every qubit, apply the CNOTs, post-select each measured qubit on
/// `outcomes` (one bit per measured qubit, in qubit order), and return the
/// renormalised state of the unmeasured qubits in qubit order. `choices`
/// picks the option of each configurable measurement (default: first).
/// Throws TooManyQubits, ZeroProbabilityOutcome, SizeMismatch.
StateVector statevector_run(const IcmCircuit &icm, std::span<const int> outcomes, const Bindings &bindings = {},
                            std::span<const std::size_t> choices = {});

}  // namespace ccnot
