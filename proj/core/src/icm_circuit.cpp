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

#include "ccnot/icm_circuit.hpp"

#include <string>

#include "ccnot/error.hpp"

namespace ccnot {

namespace {

void check_config(std::size_t q, const QubitConfig &cfg) {
    auto fail = [q](const char *why) {
        throw Error(ErrorCode::InvalidAncillaConfig, "qubit " + std::to_string(q) + ": " + why);
    };
    switch (cfg.role) {
    case QubitRole::Input:
        if (!cfg.init.symbolic()) fail("input qubit needs a symbolic initialisation");
        break;
    case QubitRole::Output:
        if (cfg.init.symbolic()) fail("output qubit needs a concrete initialisation");
        if (!cfg.meas.is_none()) fail("output qubit must not be measured");
        break;
    case QubitRole::Ancilla:
        if (cfg.init.symbolic()) fail("ancilla needs a concrete initialisation");
        if (cfg.meas.is_none()) fail("ancilla must be measured");
        break;
    }
    if (cfg.meas.options.size() > 2) fail("at most two measurement options");
}

}  // namespace

IcmCircuit::IcmCircuit(LinearCircuit circuit, std::vector<QubitConfig> configs)
    : circuit_(std::move(circuit)), configs_(std::move(configs)) {
    if (configs_.size() != circuit_.qubit_count()) {
        throw Error(ErrorCode::CountMismatch, std::to_string(configs_.size()) + " configurations for " +
                                                  std::to_string(circuit_.qubit_count()) + " qubits");
    }
    for (std::size_t q = 0; q < configs_.size(); ++q) {
        check_config(q, configs_[q]);
    }
}

std::vector<std::size_t> IcmCircuit::unmeasured() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < configs_.size(); ++q) {
        if (configs_[q].meas.is_none()) out.push_back(q);
    }
    return out;
}

}  // namespace ccnot
