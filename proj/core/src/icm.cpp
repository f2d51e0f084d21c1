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

#include "ccnot/icm.hpp"

#include <algorithm>
#include <string>

#include "ccnot/error.hpp"

namespace ccnot {

IcmCircuit configure(const LinearCircuit &l, std::vector<QubitConfig> configs) {
    return IcmCircuit(l, std::move(configs));
}

namespace {

QubitConfig input(std::string name, MeasBasis m = MeasBasis::none()) {
    return {QubitRole::Input, InitBasis::input(std::move(name)), std::move(m)};
}
QubitConfig output(InitBasis init) { return {QubitRole::Output, std::move(init), MeasBasis::none()}; }
QubitConfig ancilla(InitBasis init, MeasBasis m) { return {QubitRole::Ancilla, std::move(init), std::move(m)}; }

// Z-type teleportation: the state enters as the target and is measured in Z,
// the prepared qubit controls and carries the result.
IcmCircuit z_teleport(InitBasis carrier) {
    return IcmCircuit(LinearCircuit::from_pairs(2, {{1, 0}}),
                      {input("phi", MeasBasis::in(Basis::Z)), output(std::move(carrier))});
}

}  // namespace

IcmCircuit gadget(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::Teleport:
        return z_teleport(InitBasis::plus());
    case GadgetKind::T:
        return z_teleport(InitBasis::a());
    case GadgetKind::P:
        return z_teleport(InitBasis::y());
    case GadgetKind::V:
        return IcmCircuit(LinearCircuit::from_pairs(2, {{1, 0}}),
                          {output(InitBasis::y()), input("phi", MeasBasis::in(Basis::X))});
    case GadgetKind::Bell:
        return IcmCircuit(LinearCircuit::from_pairs(2, {{1, 0}}), {output(InitBasis::zero()), output(InitBasis::plus())});
    case GadgetKind::MeasureZ:
        return IcmCircuit(LinearCircuit::from_pairs(2, {{1, 0}}),
                          {ancilla(InitBasis::zero(), MeasBasis::in(Basis::Z)), input("phi")});
    case GadgetKind::RemoteCnot:
        return IcmCircuit(LinearCircuit::from_pairs(4, {{1, 0}, {2, 1}, {1, 3}}),
                          {input("c", MeasBasis::in(Basis::Z)), ancilla(InitBasis::plus(), MeasBasis::in(Basis::X)),
                           input("t"), output(InitBasis::zero())});
    case GadgetKind::Sdt:
        return IcmCircuit(LinearCircuit::from_pairs(4, {{3, 1}, {0, 1}, {2, 0}}),
                          {input("phi", MeasBasis::configurable(Basis::Z, Basis::X)),
                           ancilla(InitBasis::zero(), MeasBasis::configurable(Basis::X, Basis::Z)),
                           output(InitBasis::plus()), output(InitBasis::plus())});
    }
    throw Error(ErrorCode::UnknownGate, "unknown gadget");
}

std::string_view gadget_name(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::Teleport: return "teleport";
    case GadgetKind::T: return "t";
    case GadgetKind::P: return "p";
    case GadgetKind::V: return "v";
    case GadgetKind::Bell: return "bell";
    case GadgetKind::MeasureZ: return "measure-z";
    case GadgetKind::RemoteCnot: return "remote-cnot";
    case GadgetKind::Sdt: return "sdt";
    }
    return "?";
}

namespace {

class Builder {
  public:
    explicit Builder(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            configs_.push_back(input("q" + std::to_string(i)));
            carrier_.push_back(i);
        }
    }

    void cnot(std::size_t c, std::size_t t) {
        gates_.push_back({carrier_[c], carrier_[t], gates_.size(), std::nullopt});
    }

    // Z-teleport through a fresh qubit prepared in `state`.
    void z_gadget(std::size_t q, InitBasis state) {
        std::size_t fresh = add(std::move(state));
        gates_.push_back({fresh, carrier_[q], gates_.size(), std::nullopt});
        measure(carrier_[q], Basis::Z);
        carrier_[q] = fresh;
        ++gadgets_;
    }

    void v_gadget(std::size_t q) {
        std::size_t fresh = add(InitBasis::y());
        gates_.push_back({carrier_[q], fresh, gates_.size(), std::nullopt});
        measure(carrier_[q], Basis::X);
        carrier_[q] = fresh;
        ++gadgets_;
    }

    Translation finish() {
        std::size_t n = configs_.size();
        return {IcmCircuit(LinearCircuit(n, std::move(gates_)), std::move(configs_)), std::move(carrier_), gadgets_};
    }

  private:
    std::size_t add(InitBasis state) {
        configs_.push_back(output(std::move(state)));
        return configs_.size() - 1;
    }

    void measure(std::size_t q, Basis b) {
        QubitConfig &cfg = configs_[q];
        cfg.meas = MeasBasis::in(b);
        if (cfg.role == QubitRole::Output) cfg.role = QubitRole::Ancilla;
    }

    std::vector<QubitConfig> configs_;
    std::vector<LinearGate> gates_;
    std::vector<std::size_t> carrier_;
    std::size_t gadgets_ = 0;
};

}  // namespace

Translation translate_to_icm(const Program &program) {
    Builder b(program.qubits);
    auto check = [&](std::size_t q) {
        if (q >= program.qubits) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "qubit " + std::to_string(q) + " of " + std::to_string(program.qubits));
        }
    };
    for (const LogicalOp &op : program.ops) {
        check(op.qubit);
        std::size_t q = op.qubit;
        switch (op.gate) {
        case LogicalGate::Cnot:
            check(op.target);
            if (op.target == q) throw Error(ErrorCode::ControlEqualsTarget, "cnot on qubit " + std::to_string(q));
            b.cnot(q, op.target);
            break;
        case LogicalGate::T:
            b.z_gadget(q, InitBasis::a());
            break;
        case LogicalGate::P:
            b.z_gadget(q, InitBasis::y());
            break;
        case LogicalGate::V:
            b.v_gadget(q);
            break;
        case LogicalGate::Tdg:
            b.z_gadget(q, InitBasis::a());
            [[fallthrough]];
        case LogicalGate::Pdg:
            for (int k = 0; k < 3; ++k) b.z_gadget(q, InitBasis::y());
            break;
        case LogicalGate::H:
            b.z_gadget(q, InitBasis::y());
            for (int k = 0; k < 3; ++k) b.v_gadget(q);
            b.z_gadget(q, InitBasis::y());
            break;
        }
    }
    return b.finish();
}

std::pair<CircularCircuit, JoinRecord> strip_and_circularize(const IcmCircuit &icm) {
    return circularize(icm.circuit());
}

FaultInjection inject_smgf(const CircularCircuit &c, const CutSet &base, const FaultSpec &f) {
    auto index = c.index_of(f.gate);
    if (!index) throw Error(ErrorCode::UnknownGate, "no gate with id " + std::to_string(f.gate));
    validate_cut_set(c, base);
    WireId w = c.gate(*index).control;
    std::size_t k = c.symbol_index(w, *index);
    std::size_t gaps = c.gap_count(w);
    Gap before{w, (k + gaps - 1) % gaps};
    Gap after{w, k};

    FaultInjection out{base, {}, before, ancilla(InitBasis::zero(), MeasBasis::in(Basis::Z))};
    for (const Gap &g : {before, after}) {
        if (!out.cuts.contains(g)) {
            out.cuts = out.cuts.with(g);
            out.added.push_back(g);
        }
    }
    return out;
}

StabiliserMap derive_with_fault(const CircularCircuit &c, const CutSet &base, Direction d, const FaultSpec &f) {
    FaultInjection inj = inject_smgf(c, base, f);
    RadialAngle angle = validate_cut_set(c, base);
    std::vector<Arc> arcs = cut_arcs(c, base, angle);

    WireId w = inj.ancilla_start.wire;
    std::size_t gaps = c.gap_count(w);
    std::size_t k = (inj.ancilla_start.index + 1) % gaps;

    StabiliserMap out(arcs.size());
    for (ModelKind kind : {ModelKind::X, ModelKind::Z}) {
        BooleanModel m = apply_cuts(build_model(c, kind), inj.cuts);
        if (inj.added.size() == 2) {
            m = add_join(m, m.last_segment(w, (k + gaps - 1) % gaps), m.first_segment(w, (k + 1) % gaps));
        }
        std::size_t ancilla_in = d == Direction::Clockwise ? m.first_segment(w, k) : m.last_segment(w, k);
        std::vector<Pin> pins{{ancilla_in, kind == ModelKind::Z}};

        std::vector<QubitBoundary> bounds;
        for (const Arc &arc : arcs) {
            std::vector<std::size_t> syms = arc.symbols;
            if (arc.wire == w) std::erase(syms, k);
            if (syms.empty()) {
                bounds.push_back({});
                continue;
            }
            std::size_t head = m.first_segment(arc.wire, syms.front());
            std::size_t tail = m.last_segment(arc.wire, syms.back());
            if (d == Direction::Clockwise) {
                bounds.push_back({head, tail});
            } else {
                bounds.push_back({tail, head});
            }
        }
        auto images = solve_images(m, bounds, pins);
        for (std::size_t q = 0; q < arcs.size(); ++q) {
            if (kind == ModelKind::X) {
                out.set_x_image(q, std::move(images[q]));
            } else {
                out.set_z_image(q, std::move(images[q]));
            }
        }
    }
    return out;
}

}  // namespace ccnot
