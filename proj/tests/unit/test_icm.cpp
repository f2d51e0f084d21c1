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

#include <doctest.h>

#include <random>

#include "ccnot/boolean_model.hpp"
#include "ccnot/error.hpp"
#include "ccnot/icm.hpp"
#include "ccnot/pauli_oracle.hpp"
#include "ccnot/statevector.hpp"
#include "oracles.hpp"

using namespace ccnot;
using ccnot::testing::Cplx;
using ccnot::testing::Matrix;
using ccnot::testing::Pairs;
using ccnot::testing::U2;

namespace {

CutSet cuts_of(const std::vector<std::pair<std::size_t, std::size_t>> &gaps) {
    std::vector<Gap> g;
    for (auto [w, k] : gaps) g.push_back({WireId{w}, k});
    return CutSet::from_gaps(g);
}

ErrorCode code_of(auto &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Syntax;
}

QubitConfig in(std::string name, MeasBasis m = MeasBasis::none()) {
    return {QubitRole::Input, InitBasis::input(std::move(name)), std::move(m)};
}

// Dense reference simulation of a logical program, independent of the
// library simulator.
struct Dense {
    std::size_t n;
    std::vector<Cplx> amp;

    void one(std::size_t q, const U2 &u) {
        for (std::size_t x = 0; x < amp.size(); ++x) {
            if ((x >> q) & 1U) continue;
            std::size_t y = x | (std::size_t{1} << q);
            Cplx a0 = amp[x], a1 = amp[y];
            amp[x] = u[0] * a0 + u[1] * a1;
            amp[y] = u[2] * a0 + u[3] * a1;
        }
    }
    void cnot(std::size_t c, std::size_t t) {
        for (std::size_t x = 0; x < amp.size(); ++x)
            if (((x >> c) & 1U) && !((x >> t) & 1U)) std::swap(amp[x], amp[x | (std::size_t{1} << t)]);
    }
};

U2 unitary_of(LogicalGate g) {
    switch (g) {
    case LogicalGate::T: return testing::kT;
    case LogicalGate::Tdg: return testing::kTdg;
    case LogicalGate::P: return testing::kP;
    case LogicalGate::Pdg: return testing::kPdg;
    case LogicalGate::V: return testing::kV;
    case LogicalGate::H: return testing::kH;
    case LogicalGate::Cnot: break;
    }
    return {};
}

const std::vector<LogicalOp> kToffoli{
    {LogicalGate::H, 2},       {LogicalGate::Cnot, 1, 2}, {LogicalGate::Tdg, 2},     {LogicalGate::Cnot, 0, 2},
    {LogicalGate::T, 2},       {LogicalGate::Cnot, 1, 2}, {LogicalGate::Tdg, 2},     {LogicalGate::Cnot, 0, 2},
    {LogicalGate::Tdg, 1},     {LogicalGate::T, 2},       {LogicalGate::Cnot, 0, 1}, {LogicalGate::H, 2},
    {LogicalGate::Tdg, 1},     {LogicalGate::Cnot, 0, 1}, {LogicalGate::T, 0},       {LogicalGate::P, 1},
};

}  // namespace

TEST_CASE("configure") {
    LinearCircuit rc = LinearCircuit::from_pairs(4, {{1, 0}, {2, 1}, {1, 3}});
    IcmCircuit remote = configure(rc, {in("c", MeasBasis::in(Basis::Z)),
                                       {QubitRole::Ancilla, InitBasis::plus(), MeasBasis::in(Basis::X)},
                                       in("t"),
                                       {QubitRole::Output, InitBasis::zero(), MeasBasis::none()}});
    CHECK(remote == gadget(GadgetKind::RemoteCnot));
    CHECK(remote.unmeasured() == std::vector<std::size_t>{2, 3});

    LinearCircuit sdt = LinearCircuit::from_pairs(4, {{3, 1}, {0, 1}, {2, 0}});
    IcmCircuit s = configure(sdt, {in("phi", MeasBasis::configurable(Basis::Z, Basis::X)),
                                   {QubitRole::Ancilla, InitBasis::zero(), MeasBasis::configurable(Basis::X, Basis::Z)},
                                   {QubitRole::Output, InitBasis::plus(), MeasBasis::none()},
                                   {QubitRole::Output, InitBasis::plus(), MeasBasis::none()}});
    CHECK(s == gadget(GadgetKind::Sdt));

    CHECK(code_of([&] { configure(sdt, {in("a"), in("b"), in("c")}); }) == ErrorCode::CountMismatch);
    LinearCircuit one = LinearCircuit::from_pairs(2, {{0, 1}});
    QubitConfig out_plus{QubitRole::Output, InitBasis::plus(), MeasBasis::none()};
    CHECK(code_of([&] {
              configure(one, {out_plus, {QubitRole::Output, InitBasis::zero(), MeasBasis::in(Basis::Z)}});
          }) == ErrorCode::InvalidAncillaConfig);
    CHECK(code_of([&] {
              configure(one, {out_plus, {QubitRole::Ancilla, InitBasis::zero(), MeasBasis::none()}});
          }) == ErrorCode::InvalidAncillaConfig);
    CHECK(code_of([&] {
              configure(one, {out_plus, {QubitRole::Input, InitBasis::zero(), MeasBasis::none()}});
          }) == ErrorCode::InvalidAncillaConfig);
    CHECK(code_of([&] {
              configure(one, {out_plus, {QubitRole::Ancilla, InitBasis::input("x"), MeasBasis::in(Basis::Z)}});
          }) == ErrorCode::InvalidAncillaConfig);
}

TEST_CASE("gadget templates") {
    IcmCircuit t = gadget(GadgetKind::T);
    CHECK(t.qubit_count() == 2);
    CHECK(t.circuit().gate_pairs() == Pairs{{1, 0}});
    CHECK(t.config(1).init == InitBasis::a());
    CHECK(t.config(0).meas == MeasBasis::in(Basis::Z));

    IcmCircuit s = gadget(GadgetKind::Sdt);
    CHECK(s.qubit_count() == 4);
    CHECK(s.circuit().gate_count() == 3);
    CHECK(s.config(0).init.symbolic());
    CHECK(s.config(1).init == InitBasis::zero());
    CHECK(s.config(2).init == InitBasis::plus());
    CHECK(s.config(3).init == InitBasis::plus());
    CHECK(gadget_name(GadgetKind::RemoteCnot) == "remote-cnot");
}

TEST_CASE("translate_to_icm") {
    Translation t = translate_to_icm({1, {{LogicalGate::T, 0}}});
    CHECK(t.icm.circuit() == gadget(GadgetKind::T).circuit());
    CHECK(t.icm.config(0).init == InitBasis::input("q0"));
    CHECK(t.icm.config(0).meas == gadget(GadgetKind::T).config(0).meas);
    CHECK(t.icm.config(1) == gadget(GadgetKind::T).config(1));
    CHECK(t.carrier == std::vector<std::size_t>{1});

    Translation h = translate_to_icm({1, {{LogicalGate::H, 0}}});
    CHECK(h.icm.qubit_count() == 6);
    CHECK(h.gadgets == 5);
    CHECK(h.icm.unmeasured() == std::vector<std::size_t>{5});

    Translation cx = translate_to_icm({2, {{LogicalGate::Cnot, 0, 1}}});
    CHECK(cx.icm.qubit_count() == 2);
    CHECK(cx.icm.circuit().gate_pairs() == Pairs{{0, 1}});

    CHECK(code_of([] { translate_to_icm({1, {{LogicalGate::T, 1}}}); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { translate_to_icm({2, {{LogicalGate::Cnot, 1, 1}}}); }) == ErrorCode::ControlEqualsTarget);
}

TEST_CASE("gate list decomposes Toffoli") {
    for (std::size_t x = 0; x < 8; ++x) {
        Dense d{3, std::vector<Cplx>(8)};
        d.amp[x] = 1;
        for (const LogicalOp &op : kToffoli) {
            if (op.gate == LogicalGate::Cnot) {
                d.cnot(op.qubit, op.target);
            } else {
                d.one(op.qubit, unitary_of(op.gate));
            }
        }
        std::size_t y = (x & 3U) == 3U ? x ^ 4U : x;
        CHECK(std::abs(std::abs(d.amp[y]) - 1.0) < 1e-12);
        // Global phase must not depend on the input.
        CHECK(std::abs(d.amp[y] - Cplx{1, 0}) < 1e-12);
    }
}

TEST_CASE("Toffoli translation counts") {
    Translation t = translate_to_icm({3, kToffoli});
    CHECK(t.icm.qubit_count() == 33);
    CHECK(t.icm.circuit().gate_count() == 6 + 30);
    auto [c, rec] = strip_and_circularize(t.icm);
    CHECK(c.wire_count() == t.icm.qubit_count() - rec.joins.size());
    CHECK(enumerate_cut_points(c).size() == 2 * c.gate_count());
    Pairs mapped;
    for (const auto &[ctl, tgt] : t.icm.circuit().gate_pairs()) {
        mapped.emplace_back(rec.wire_of_qubit[ctl], rec.wire_of_qubit[tgt]);
    }
    CHECK(cyclic_equal(c.gate_pairs(), mapped));
}

TEST_CASE("property: translation preserves the logical action") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> g;
    const LogicalGate kinds[] = {LogicalGate::Cnot, LogicalGate::T, LogicalGate::Tdg, LogicalGate::P,
                                 LogicalGate::Pdg,  LogicalGate::V, LogicalGate::H};
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        std::size_t len = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        Program p{n, {}};
        for (std::size_t i = 0; i < len; ++i) {
            LogicalGate k = kinds[rng() % (n > 1 ? 7 : 6) + (n > 1 ? 0 : 1)];
            LogicalOp op{k, rng() % n, 0};
            if (k == LogicalGate::Cnot) op.target = (op.qubit + 1 + rng() % (n - 1)) % n;
            p.ops.push_back(op);
        }
        Translation t = translate_to_icm(p);
        if (t.icm.qubit_count() > kMaxStateQubits) continue;

        Bindings b;
        Dense ref{n, {Cplx{1, 0}}};
        std::vector<Qubit1> inputs;
        for (std::size_t q = 0; q < n; ++q) {
            Cplx a{g(rng), g(rng)}, c{g(rng), g(rng)};
            double nr = std::sqrt(std::norm(a) + std::norm(c));
            Qubit1 k{a / nr, c / nr};
            b["q" + std::to_string(q)] = k;
            inputs.push_back(k);
        }
        ref.amp.assign(std::size_t{1} << n, Cplx{1, 0});
        for (std::size_t x = 0; x < ref.amp.size(); ++x)
            for (std::size_t q = 0; q < n; ++q) ref.amp[x] *= inputs[q][(x >> q) & 1U];
        for (const LogicalOp &op : p.ops) {
            if (op.gate == LogicalGate::Cnot) {
                ref.cnot(op.qubit, op.target);
            } else {
                ref.one(op.qubit, unitary_of(op.gate));
            }
        }

        std::vector<int> zeros(t.icm.qubit_count() - t.icm.unmeasured().size(), 0);
        StateVector out = statevector_run(t.icm, zeros, b);
        // Result qubits come in ICM index order; map them back to logical order.
        auto un = t.icm.unmeasured();
        std::vector<std::size_t> slot(n);
        for (std::size_t q = 0; q < n; ++q)
            slot[q] = static_cast<std::size_t>(std::find(un.begin(), un.end(), t.carrier[q]) - un.begin());
        Cplx overlap{};
        for (std::size_t x = 0; x < ref.amp.size(); ++x) {
            std::size_t y = 0;
            for (std::size_t q = 0; q < n; ++q)
                if ((x >> q) & 1U) y |= std::size_t{1} << slot[q];
            overlap += std::conj(ref.amp[x]) * out.amplitudes()[y];
        }
        CAPTURE(trial);
        CHECK(std::norm(overlap) > 1 - 1e-9);
    }
}

TEST_CASE("strip_and_circularize") {
    auto [t, rt] = strip_and_circularize(gadget(GadgetKind::T));
    CHECK(t.wire_count() == 2);
    CHECK(rt.joins.empty());
    CHECK(rt.loops == std::vector<JoinRecord::Join>{{0, 0}, {1, 1}});
    auto [bell, rb] = strip_and_circularize(gadget(GadgetKind::Bell));
    CHECK(bell == t);
    CHECK(rb == rt);
}

TEST_CASE("property: configuration never changes the skeleton") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        auto [n, gates] = testing::random_linear(rng, 8, 20);
        LinearCircuit l = LinearCircuit::from_pairs(n, gates);
        std::vector<QubitConfig> cfg;
        for (std::size_t q = 0; q < n; ++q) {
            switch (rng() % 3) {
            case 0: cfg.push_back(in("x" + std::to_string(q))); break;
            case 1: cfg.push_back({QubitRole::Output, InitBasis::plus(), MeasBasis::none()}); break;
            default: cfg.push_back({QubitRole::Ancilla, InitBasis::y(), MeasBasis::in(Basis::X)}); break;
            }
        }
        CHECK(strip_and_circularize(configure(l, cfg)) == circularize(l));

        auto [c, rec] = circularize(l);
        for (std::size_t a = 0; a < c.gate_count(); ++a) {
            LinearCircuit r = linearize(c, CutSet::from_gaps(testing::radial_gaps(c, a)), Direction::Clockwise);
            CHECK(r.qubit_count() == c.wire_count());
        }
    }
}

TEST_CASE("inject_smgf") {
    CircularCircuit swap = CircularCircuit::from_pairs(2, {{0, 1}, {1, 0}, {0, 1}});
    CutSet radial = cuts_of({{0, 2}, {1, 2}});
    FaultInjection f = inject_smgf(swap, radial, {1});
    // Gate 1 has its control on wire 1, symbol 1.
    CHECK(f.cuts == cuts_of({{0, 2}, {1, 0}, {1, 1}, {1, 2}}));
    CHECK(f.added.size() == 2);
    CHECK(f.ancilla_start == Gap{WireId{1}, 0});
    CHECK(f.patch.init == InitBasis::zero());

    StabiliserMap faulted = derive_with_fault(swap, radial, Direction::Clockwise, {1});
    CHECK(faulted == oracle_map(linearize(swap, radial, Direction::Clockwise).without_gate(1)));

    CircularCircuit one = CircularCircuit::from_pairs(2, {{0, 1}});
    CutSet both = cuts_of({{0, 0}, {1, 0}});
    CHECK(derive_with_fault(one, both, Direction::Clockwise, {0}) == StabiliserMap::identity(2));
    FaultInjection idem = inject_smgf(one, both, {0});
    CHECK(idem.cuts == both);
    CHECK(idem.added.empty());

    CutSet around = cuts_of({{0, 2}, {1, 0}, {1, 1}, {1, 2}});
    CHECK(inject_smgf(swap, around, {1}).cuts == around);
    CHECK(code_of([&] { inject_smgf(swap, radial, {7}); }) == ErrorCode::UnknownGate);
}

TEST_CASE("property: SMGF matches the gate-deleted oracle on every base cut set") {
    std::vector<CircularCircuit> fixtures{
        CircularCircuit::from_pairs(2, {{0, 1}, {1, 0}, {0, 1}}),
        CircularCircuit::from_pairs(2, {{0, 1}}),
        strip_and_circularize(gadget(GadgetKind::RemoteCnot)).first,
        strip_and_circularize(gadget(GadgetKind::Sdt)).first,
    };
    std::mt19937_64 rng(43);
    for (int i = 0; i < 40; ++i) fixtures.push_back(testing::random_circular(rng, 3, 5));
    std::size_t checked = 0;
    for (const CircularCircuit &c : fixtures) {
        for (const auto &gaps : testing::gap_subsets(c, 1, std::min<std::size_t>(c.total_gaps(), 6))) {
            CutSet base = CutSet::from_gaps(gaps);
            if (radial_angles(c, base).empty()) continue;
            for (Direction d : {Direction::Clockwise, Direction::CounterClockwise}) {
                LinearCircuit l = linearize(c, base, d);
                for (const CnotGate &g : c.gates()) {
                    CHECK(derive_with_fault(c, base, d, {g.id}) == oracle_map(l.without_gate(g.id)));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 1000);
}
