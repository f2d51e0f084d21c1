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

#include "ccnot/dot_export.hpp"

#include <sstream>

namespace ccnot {

namespace {

std::string symbol_node(std::size_t wire, std::size_t k) {
    return "w" + std::to_string(wire) + "s" + std::to_string(k);
}

void symbol_style(std::ostringstream &out, const std::string &name, SymbolKind kind, std::size_t gate_id) {
    out << "  " << name;
    if (kind == SymbolKind::Control) {
        out << " [shape=point, width=0.15, xlabel=\"g" << gate_id << "\"];\n";
    } else {
        out << " [shape=circle, label=\"+\", width=0.3, fixedsize=true, xlabel=\"g" << gate_id << "\"];\n";
    }
}

}  // namespace

std::string to_dot(const CircularCircuit &c, const CutSet &cuts) {
    std::ostringstream out;
    out << "digraph circular {\n  rankdir=LR;\n  node [fontsize=10];\n";
    for (std::size_t w = 0; w < c.wire_count(); ++w) {
        auto syms = c.symbols(WireId{w});
        out << "  subgraph cluster_w" << w << " {\n  label=\"wire " << w << "\";\n";
        for (std::size_t k = 0; k < syms.size(); ++k) {
            symbol_style(out, symbol_node(w, k), syms[k].kind, c.gate(syms[k].gate_index).id);
        }
        for (std::size_t k = 0; k < syms.size(); ++k) {
            std::string next = symbol_node(w, (k + 1) % syms.size());
            if (cuts.contains(Gap{WireId{w}, k})) {
                std::string cut = "cut_w" + std::to_string(w) + "g" + std::to_string(k);
                out << "  " << cut << " [shape=box, style=filled, fillcolor=red, label=\"cut\"];\n";
                out << "  " << symbol_node(w, k) << " -> " << cut << " [arrowhead=none];\n";
                out << "  " << cut << " -> " << next << " [style=dashed, arrowhead=none];\n";
            } else {
                out << "  " << symbol_node(w, k) << " -> " << next << " [arrowhead=none];\n";
            }
        }
        out << "  }\n";
    }
    for (std::size_t i = 0; i < c.gate_count(); ++i) {
        const CnotGate &g = c.gate(i);
        out << "  " << symbol_node(g.control.index, c.symbol_index(g.control, i)) << " -> "
            << symbol_node(g.target.index, c.symbol_index(g.target, i)) << " [color=blue, constraint=false];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const LinearCircuit &l) {
    std::ostringstream out;
    out << "digraph linear {\n  rankdir=LR;\n  node [fontsize=10];\n";
    std::vector<std::vector<std::pair<std::size_t, SymbolKind>>> rows(l.qubit_count());
    for (std::size_t i = 0; i < l.gate_count(); ++i) {
        const LinearGate &g = l.gates()[i];
        rows[g.control].emplace_back(i, SymbolKind::Control);
        rows[g.target].emplace_back(i, SymbolKind::Target);
    }
    for (std::size_t q = 0; q < rows.size(); ++q) {
        out << "  in" << q << " [shape=plaintext, label=\"q" << q << "\"];\n";
        out << "  out" << q << " [shape=plaintext, label=\"\"];\n";
        std::string prev = "in" + std::to_string(q);
        for (const auto &[gi, kind] : rows[q]) {
            std::string name = "q" + std::to_string(q) + "g" + std::to_string(gi);
            symbol_style(out, name, kind, gi);
            out << "  " << prev << " -> " << name << " [arrowhead=none];\n";
            prev = name;
        }
        out << "  " << prev << " -> out" << q << " [arrowhead=none];\n";
    }
    for (std::size_t i = 0; i < l.gate_count(); ++i) {
        const LinearGate &g = l.gates()[i];
        out << "  q" << g.control << "g" << i << " -> q" << g.target << "g" << i
            << " [color=blue, constraint=false];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ccnot
