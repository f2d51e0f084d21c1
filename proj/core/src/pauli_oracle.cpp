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

#include "ccnot/pauli_oracle.hpp"

#include "ccnot/error.hpp"

namespace ccnot {

PauliString PauliString::single(std::size_t qubits, std::size_t q, char op) {
    PauliString p(qubits);
    p.x.at(q) = op == 'X' || op == 'Y';
    p.z.at(q) = op == 'Z' || op == 'Y';
    return p;
}

std::string PauliString::str() const {
    std::string out(1, sign > 0 ? '+' : '-');
    for (std::size_t q = 0; q < size(); ++q) {
        out.push_back(x[q] ? (z[q] ? 'Y' : 'X') : (z[q] ? 'Z' : 'I'));
    }
    return out;
}

PauliString conjugate_cnot(const PauliString &p, std::size_t control, std::size_t target) {
    if (control >= p.size() || target >= p.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "CNOT qubit outside the Pauli string");
    }
    if (control == target) {
        throw Error(ErrorCode::ControlEqualsTarget, "CNOT control equals target");
    }
    PauliString out = p;
    // Aaronson-Gottesman phase rule; it never fires for pure X or Z inputs.
    if (p.x[control] && p.z[target] && (p.x[target] == p.z[control])) {
        out.sign = -out.sign;
    }
    out.x[target] = p.x[target] != p.x[control];
    out.z[control] = p.z[control] != p.z[target];
    return out;
}

PauliString propagate_pauli(const LinearCircuit &l, const PauliString &p) {
    if (p.size() != l.qubit_count()) {
        throw Error(ErrorCode::SizeMismatch, "Pauli string size differs from qubit count");
    }
    PauliString out = p;
    for (const LinearGate &g : l.gates()) {
        out = conjugate_cnot(out, g.control, g.target);
    }
    return out;
}

StabiliserMap oracle_map(const LinearCircuit &l) {
    const std::size_t n = l.qubit_count();
    StabiliserMap m(n);
    for (std::size_t q = 0; q < n; ++q) {
        PauliString px = propagate_pauli(l, PauliString::single(n, q, 'X'));
        PauliString pz = propagate_pauli(l, PauliString::single(n, q, 'Z'));
        std::vector<std::size_t> xs, zs;
        for (std::size_t i = 0; i < n; ++i) {
            if (px.x[i]) {
                xs.push_back(i);
            }
            if (pz.z[i]) {
                zs.push_back(i);
            }
        }
        m.set_x_image(q, std::move(xs));
        m.set_z_image(q, std::move(zs));
    }
    return m;
}

bool equivalent_up_to_sign(const StabiliserMap &a, const StabiliserMap &b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw Error(ErrorCode::ShapeMismatch, "maps have different qubit counts");
    }
    for (std::size_t q = 0; q < a.qubit_count(); ++q) {
        if (a.x_image(q) != b.x_image(q) || a.z_image(q) != b.z_image(q)) {
            return false;
        }
    }
    return true;
}

}  // namespace ccnot
