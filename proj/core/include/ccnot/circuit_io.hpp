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

#include <filesystem>
#include <string>
#include <string_view>

#include "ccnot/circuit.hpp"
#include "ccnot/icm.hpp"
#include "ccnot/icm_circuit.hpp"

namespace ccnot {

// Line-oriented text formats. `#` starts a comment, `;` separates statements.
//
//   circular            linear              icm
//   wires 2             qubits 3            qubits 2
//   cnot 0 1            cnot 0 2            cnot 1 0
//   cnot 1 0 pos 7 id 3                     init 0 in:phi
//                                           init 1 plus
//                                           measure 0 z
//
//   cuts: `cut <wire> <gap>` and optional `direction cw|ccw`
//   program: `program`, `qubits N`, then `cnot c t`, `t q`, `tdg q`, ...
//   fault: `smgf <gate id>`
//
// Errors are thrown as Syntax with a `line N:` prefix.

enum class CircuitFormat { Circular, Linear, Icm, Program };

/// Header keyword of `text`. Throws Syntax when missing or unknown.
CircuitFormat detect_format(std::string_view text);

CircularCircuit parse_circular(std::string_view text);
LinearCircuit parse_linear(std::string_view text);
IcmCircuit parse_icm(std::string_view text);
Program parse_program(std::string_view text);

std::string format_circuit(const CircularCircuit &c);
std::string format_circuit(const LinearCircuit &l);
std::string format_icm(const IcmCircuit &icm);
std::string format_program(const Program &p);

struct CutFile {
    CutSet cuts;
    Direction direction = Direction::Clockwise;
};

CutFile parse_cuts(std::string_view text);
std::string format_cuts(const CutSet &cuts, Direction d = Direction::Clockwise);

FaultSpec parse_fault(std::string_view text);

/// Whole file as a string. Throws Syntax when it cannot be read.
std::string read_text_file(const std::filesystem::path &path);

std::string_view basis_name(Basis b);
std::string format_init(const InitBasis &init);
std::string format_meas(const MeasBasis &meas);

}  // namespace ccnot
