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

namespace ccnot {

enum class Basis { X, Y, Z, A };

/// Qubit initialisation: a fixed state, or a named input supplied at run time.
struct InitBasis {
    enum class Kind { Zero, Plus, Y, A, Symbolic };

    Kind kind = Kind::Zero;
    std::string name;  ///< input name when symbolic

    static InitBasis zero() { return {Kind::Zero, {}}; }
    static InitBasis plus() { return {Kind::Plus, {}}; }
    static InitBasis y() { return {Kind::Y, {}}; }
    static InitBasis a() { return {Kind::A, {}}; }
    static InitBasis input(std::string name) { return {Kind::Symbolic, std::move(name)}; }

    bool symbolic() const noexcept { return kind == Kind::Symbolic; }

    bool operator==(const InitBasis &) const = default;
};

/// Measurement: none, one basis, or a configurable choice between two.
struct MeasBasis {
    std::vector<Basis> options;

    static MeasBasis none() { return {}; }
    static MeasBasis in(Basis b) { return {{b}}; }
    static MeasBasis configurable(Basis first, Basis second) { return {{first, second}}; }

    bool is_none() const noexcept { return options.empty(); }
    bool is_configurable() const noexcept { return options.size() == 2; }

    bool operator==(const MeasBasis &) const = default;
};

enum class QubitRole {
    Input,   ///< takes a supplied state
    Output,  ///< ancilla-initialised qubit read out at the end
    Ancilla, ///< initialised and measured inside the circuit
};

struct QubitConfig {
    QubitRole role = QubitRole::Ancilla;
    InitBasis init;
    MeasBasis meas;

    bool operator==(const QubitConfig &) const = default;
};

/// A CNOT-only circuit plus the initialisation and measurement of each qubit.
class IcmCircuit {
  public:
    /// Throws CountMismatch or InvalidAncillaConfig.
    IcmCircuit(LinearCircuit circuit, std::vector<QubitConfig> configs);

    const LinearCircuit &circuit() const noexcept { return circuit_; }
    std::size_t qubit_count() const noexcept { return circuit_.qubit_count(); }
    const std::vector<QubitConfig> &configs() const noexcept { return configs_; }
    const QubitConfig &config(std::size_t q) const { return configs_.at(q); }

    /// Qubits left unmeasured, in index order.
    std::vector<std::size_t> unmeasured() const;

    bool operator==(const IcmCircuit &) const = default;

  private:
    LinearCircuit circuit_;
    std::vector<QubitConfig> configs_;
};

}  // namespace ccnot
