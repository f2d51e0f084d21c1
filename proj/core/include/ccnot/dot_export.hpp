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

#include "ccnot/circuit.hpp"

namespace ccnot {

/// Graphviz rendering of a circular circuit. Each wire is a cycle of symbol
/// nodes, each cut gap a red box node spliced into its cycle, and each gate an
/// edge from control to target. Output is deterministic.
std::string to_dot(const CircularCircuit &c, const CutSet &cuts = {});

/// Linear circuit: one chain per qubit from an input node to an output node.
std::string to_dot(const LinearCircuit &l);

}  // namespace ccnot
