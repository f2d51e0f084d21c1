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
#include <string_view>
#include <utility>
#include <vector>

#include "ccnot/boolean_model.hpp"
#include "ccnot/circuit.hpp"
#include "ccnot/icm_circuit.hpp"
#include "ccnot/stabiliser_map.hpp"

namespace ccnot {

/// Validate and attach per-qubit configuration. Throws CountMismatch or
/// InvalidAncillaConfig.
IcmCircuit configure(const LinearCircuit &l, std::vector<QubitConfig> configs);

enum class GadgetKind { Teleport, T, P, V, Bell, MeasureZ, RemoteCnot, Sdt };

/// Fixed ICM templates. Inputs are named "phi" (or "c"/"t" for RemoteCnot).
IcmCircuit gadget(GadgetKind kind);
std::string_view gadget_name(GadgetKind kind);

enum class LogicalGate { Cnot, T, Tdg, P, Pdg, V, H };

struct LogicalOp {
    LogicalGate gate = LogicalGate::T;
    std::size_t qubit = 0;   ///< the acted-on qubit, or the control for CNOT
    std::size_t target = 0;  ///< CNOT only

    bool operator==(const LogicalOp &) const = default;
};

struct Program {
    std::size_t qubits = 0;
    std::vector<LogicalOp> ops;
};

struct Translation {
    IcmCircuit icm;
    std::vector<std::size_t> carrier;  ///< final ICM qubit of each logical qubit
    std::size_t gadgets = 0;
};

/// Replace single-qubit gates by teleported gadgets, splicing the logical wire
/// onto each gadget's output:
///   T -> T gadget, P -> P gadget, V -> V gadget,
///   Pdg -> P P P, Tdg -> T P P P, H -> P V V V P.
/// Inputs are named "q<i>". Throws IndexOutOfRange for bad qubit indices.
Translation translate_to_icm(const Program &program);

/// Drop initialisations and measurements, then close the CNOT skeleton into
/// circular wires.
std::pair<CircularCircuit, JoinRecord> strip_and_circularize(const IcmCircuit &icm);

struct FaultSpec {
    std::size_t gate = 0;  ///< id of the missing CNOT
};

struct FaultInjection {
    CutSet cuts;              ///< base plus the cuts isolating the control
    std::vector<Gap> added;   ///< cuts that were not already in base
    Gap ancilla_start;        ///< the ancilla is the arc after this cut
    QubitConfig patch;        ///< stuck-at-|0> configuration for the ancilla
};

/// Single missing gate fault: isolate the faulty gate's control symbol with
/// at most two extra cuts so it becomes an ancilla stuck at |0>. Throws
/// UnknownGate and propagates cut-set validation errors.
FaultInjection inject_smgf(const CircularCircuit &c, const CutSet &base, const FaultSpec &f);

/// Stabiliser map of the faulty circuit over the qubits of `base`: the
/// isolated control is pinned to |0> (never X-stabilised, Z-stabilised) and
/// the rest of its wire is rejoined around it.
StabiliserMap derive_with_fault(const CircularCircuit &c, const CutSet &base, Direction d, const FaultSpec &f);

}  // namespace ccnot
