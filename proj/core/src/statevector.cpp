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

#include "ccnot/statevector.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ccnot/error.hpp"

namespace ccnot {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Amplitude phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

StateVector::StateVector(std::size_t qubits) : qubits_(qubits) {
    if (qubits > kMaxStateQubits) {
        throw Error(ErrorCode::TooManyQubits,
                    std::to_string(qubits) + " qubits exceed the cap of " + std::to_string(kMaxStateQubits));
    }
    amps_.assign(std::size_t{1} << qubits, Amplitude{});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amps.size()) {
        ++n;
    }
    if ((std::size_t{1} << n) != amps.size()) {
        throw Error(ErrorCode::SizeMismatch, "amplitude count is not a power of two");
    }
    StateVector s(n);
    s.amps_ = std::move(amps);
    return s;
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    if (control >= qubits_ || target >= qubits_ || control == target) {
        throw Error(ErrorCode::IndexOutOfRange, "bad CNOT qubits");
    }
    const std::size_t cm = std::size_t{1} << control;
    const std::size_t tm = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cm) && !(i & tm)) {
            std::swap(amps_[i], amps_[i | tm]);
        }
    }
}

void StateVector::apply_1q(std::size_t qubit, const std::array<Amplitude, 4> &u) {
    if (qubit >= qubits_) {
        throw Error(ErrorCode::IndexOutOfRange, "qubit out of range");
    }
    const std::size_t m = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & m) {
            continue;
        }
        Amplitude a0 = amps_[i];
        Amplitude a1 = amps_[i | m];
        amps_[i] = u[0] * a0 + u[1] * a1;
        amps_[i | m] = u[2] * a0 + u[3] * a1;
    }
}

StateVector StateVector::contract(std::size_t q, const Qubit1 &bra) const {
    if (q >= qubits_) {
        throw Error(ErrorCode::IndexOutOfRange, "qubit out of range");
    }
    StateVector out(qubits_ - 1);
    const std::size_t low = (std::size_t{1} << q) - 1;
    for (std::size_t j = 0; j < out.amps_.size(); ++j) {
        std::size_t i0 = (j & low) | ((j & ~low) << 1);
        std::size_t i1 = i0 | (std::size_t{1} << q);
        out.amps_[j] = std::conj(bra[0]) * amps_[i0] + std::conj(bra[1]) * amps_[i1];
    }
    return out;
}

StateVector StateVector::product(std::span<const Qubit1> states) {
    StateVector s(states.size());
    for (std::size_t i = 0; i < s.amps_.size(); ++i) {
        Amplitude a = 1.0;
        for (std::size_t q = 0; q < states.size(); ++q) {
            a *= states[q][(i >> q) & 1u];
        }
        s.amps_[i] = a;
    }
    return s;
}

std::string StateVector::dump() const {
    std::ostringstream out;
    out.precision(12);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        out << i << ' ' << amps_[i].real() << ' ' << amps_[i].imag() << '\n';
    }
    return out.str();
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw Error(ErrorCode::SizeMismatch, "states differ in qubit count");
    }
    Amplitude overlap = 0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
        overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return std::norm(overlap);
}

Qubit1 init_state(InitBasis::Kind kind) {
    switch (kind) {
        case InitBasis::Kind::Zero: return {1.0, 0.0};
        case InitBasis::Kind::Plus: return {kInvSqrt2, kInvSqrt2};
        case InitBasis::Kind::Y: return {kInvSqrt2, kInvSqrt2 * Amplitude(0, 1)};
        case InitBasis::Kind::A: return {kInvSqrt2, kInvSqrt2 * phase(std::numbers::pi / 4)};
        case InitBasis::Kind::Symbolic: break;
    }
    throw Error(ErrorCode::MissingBinding, "symbolic input has no fixed state");
}

Qubit1 measurement_state(Basis b, int outcome) {
    const double s = outcome ? -1.0 : 1.0;
    switch (b) {
        case Basis::Z: return outcome ? Qubit1{0.0, 1.0} : Qubit1{1.0, 0.0};
        case Basis::X: return {kInvSqrt2, s * kInvSqrt2};
        case Basis::Y: return {kInvSqrt2, s * kInvSqrt2 * Amplitude(0, 1)};
        case Basis::A: return {kInvSqrt2, s * kInvSqrt2 * phase(std::numbers::pi / 4)};
    }
    return {1.0, 0.0};
}

StateVector statevector_run(const IcmCircuit &icm, std::span<const int> outcomes, const Bindings &bindings,
                            std::span<const std::size_t> choices) {
    const std::size_t n = icm.qubit_count();
    if (n > kMaxStateQubits) {
        throw Error(ErrorCode::TooManyQubits,
                    std::to_string(n) + " qubits exceed the cap of " + std::to_string(kMaxStateQubits));
    }
    std::vector<Qubit1> init;
    init.reserve(n);
    for (const auto &cfg : icm.configs()) {
        if (cfg.init.symbolic()) {
            auto it = bindings.find(cfg.init.name);
            if (it == bindings.end()) {
                throw Error(ErrorCode::MissingBinding, "no state bound to input '" + cfg.init.name + "'");
            }
            init.push_back(it->second);
        } else {
            init.push_back(init_state(cfg.init.kind));
        }
    }
    StateVector state = StateVector::product(init);
    for (const LinearGate &g : icm.circuit().gates()) {
        state.apply_cnot(g.control, g.target);
    }

    std::vector<std::size_t> measured;
    std::size_t configurable = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (!icm.config(q).meas.is_none()) {
            measured.push_back(q);
            configurable += icm.config(q).meas.is_configurable() ? 1 : 0;
        }
    }
    if (outcomes.size() != measured.size()) {
        throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(measured.size()) + " outcome bits, got " +
                                                 std::to_string(outcomes.size()));
    }
    if (!choices.empty() && choices.size() != configurable) {
        throw Error(ErrorCode::SizeMismatch, "expected one choice per configurable measurement");
    }

    std::vector<Basis> bases(measured.size());
    for (std::size_t k = 0, cfg_k = 0; k < measured.size(); ++k) {
        const MeasBasis &m = icm.config(measured[k]).meas;
        std::size_t pick = 0;
        if (m.is_configurable()) {
            pick = choices.empty() ? 0 : choices[cfg_k];
            ++cfg_k;
            if (pick > 1) {
                throw Error(ErrorCode::IndexOutOfRange, "configurable choice must be 0 or 1");
            }
        }
        bases[k] = m.options[pick];
    }
    // Contract from the highest index down so lower indices stay valid.
    for (std::size_t k = measured.size(); k-- > 0;) {
        state = state.contract(measured[k], measurement_state(bases[k], outcomes[k]));
    }
    double nrm = state.norm();
    if (nrm < 1e-9) {
        throw Error(ErrorCode::ZeroProbabilityOutcome, "post-selected outcome has zero probability");
    }
    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (auto &a : amps) {
        a /= nrm;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace ccnot
