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

#include <string>
#include <string_view>

#include "ccnot/boolean_model.hpp"
#include "ccnot/circuit.hpp"
#include "ccnot/circuit_io.hpp"
#include "ccnot/icm_circuit.hpp"
#include "ccnot/stabiliser_map.hpp"

namespace ccnot {

// JSON documents carry a "type" field naming the payload. Parse errors and
// schema violations are reported as Syntax.

std::string to_json(const CircularCircuit &c);
std::string to_json(const LinearCircuit &l);
std::string to_json(const CutSet &cuts, Direction d);
std::string to_json(const StabiliserMap &m);
std::string to_json(const IcmCircuit &icm);
std::string to_json(const JoinRecord &r);

CircularCircuit circular_from_json(std::string_view text);
LinearCircuit linear_from_json(std::string_view text);
CutFile cuts_from_json(std::string_view text);
StabiliserMap map_from_json(std::string_view text);

}  // namespace ccnot
