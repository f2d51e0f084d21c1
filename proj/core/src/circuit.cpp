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

#include "ccnot/circuit.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

#include "ccnot/error.hpp"

namespace ccnot {

namespace {

std::string wire_list(const std::vector<WireId> &wires) {
    std::ostringstream out;
    for (std::size_t k = 0; k < wires.size(); ++k) {
        out << (k ? "," : "") << wires[k].index;
    }
    return out.str();
}

}  // namespace

CircularCircuit::CircularCircuit(std::size_t wires, std::vector<CnotGate> gates)
    : wires_(wires), gates_(std::move(gates)), symbols_(wires) {
    std::sort(gates_.begin(), gates_.end(),
              [](const CnotGate &a, const CnotGate &b) { return a.position < b.position; });
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        const CnotGate &g = gates_[k];
        if (g.control.index >= wires_ || g.target.index >= wires_) {
            throw Error(ErrorCode::WireOutOfRange,
                        "gate " + std::to_string(g.id) + " references a wire >= " + std::to_string(wires_));
        }
        if (g.control == g.target) {
            throw Error(ErrorCode::ControlEqualsTarget,
                        "gate " + std::to_string(g.id) + " has control == target");
        }
        if (k > 0 && gates_[k - 1].position == g.position) {
            throw Error(ErrorCode::Syntax, "two gates share position " + std::to_string(g.position));
        }
        // A gate touches two distinct wires, so each wire gets symbols in
        // position order without further sorting.
        symbols_[g.control.index].push_back({k, SymbolKind::Control});
        symbols_[g.target.index].push_back({k, SymbolKind::Target});
    }
    for (std::size_t w = 0; w < wires_; ++w) {
        if (symbols_[w].empty()) {
            throw Error(ErrorCode::EmptyWire, "wire " + std::to_string(w) + " carries no gate symbol");
        }
    }
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        for (std::size_t j = k + 1; j < gates_.size(); ++j) {
            if (gates_[k].id == gates_[j].id) {
                throw Error(ErrorCode::Syntax, "duplicate gate id " + std::to_string(gates_[k].id));
            }
        }
    }
}

CircularCircuit CircularCircuit::from_pairs(std::size_t wires,
                                            const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
    std::vector<CnotGate> gates;
    gates.reserve(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        gates.push_back({k, WireId{pairs[k].first}, WireId{pairs[k].second}, k});
    }
    return CircularCircuit(wires, std::move(gates));
}

std::optional<std::size_t> CircularCircuit::index_of(std::size_t id) const {
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        if (gates_[k].id == id) {
            return k;
        }
    }
    return std::nullopt;
}

std::size_t CircularCircuit::total_gaps() const noexcept {
    std::size_t total = 0;
    for (const auto &s : symbols_) {
        total += s.size();
    }
    return total;
}

std::size_t CircularCircuit::symbol_index(WireId wire, std::size_t gate_index) const {
    const auto &syms = symbols_.at(wire.index);
    auto it = std::lower_bound(syms.begin(), syms.end(), gate_index,
                               [](const Symbol &s, std::size_t g) { return s.gate_index < g; });
    if (it == syms.end() || it->gate_index != gate_index) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "gate " + std::to_string(gate_index) + " has no symbol on wire " + std::to_string(wire.index));
    }
    return static_cast<std::size_t>(it - syms.begin());
}

Gap CircularCircuit::gap_at(WireId wire, RadialAngle angle) const {
    const auto &syms = symbols_.at(wire.index);
    auto it = std::upper_bound(syms.begin(), syms.end(), angle.after,
                               [](std::size_t g, const Symbol &s) { return g < s.gate_index; });
    if (it == syms.begin()) {
        return {wire, syms.size() - 1};
    }
    return {wire, static_cast<std::size_t>(it - syms.begin()) - 1};
}

std::vector<std::pair<std::size_t, std::size_t>> CircularCircuit::gate_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(gates_.size());
    for (const auto &g : gates_) {
        out.emplace_back(g.control.index, g.target.index);
    }
    return out;
}

CutSet CutSet::from_gaps(std::vector<Gap> gaps) {
    std::sort(gaps.begin(), gaps.end());
    auto dup = std::adjacent_find(gaps.begin(), gaps.end());
    if (dup != gaps.end()) {
        throw Error(ErrorCode::DuplicateCut, "gap " + std::to_string(dup->index) + " on wire " +
                                                 std::to_string(dup->wire.index) + " is cut twice");
    }
    CutSet out;
    out.gaps_ = std::move(gaps);
    return out;
}

bool CutSet::contains(const Gap &gap) const { return std::binary_search(gaps_.begin(), gaps_.end(), gap); }

std::size_t CutSet::cuts_on(WireId wire) const {
    return static_cast<std::size_t>(
        std::count_if(gaps_.begin(), gaps_.end(), [&](const Gap &g) { return g.wire == wire; }));
}

CutSet CutSet::with(const Gap &gap) const {
    if (contains(gap)) {
        return *this;
    }
    CutSet out = *this;
    out.gaps_.insert(std::upper_bound(out.gaps_.begin(), out.gaps_.end(), gap), gap);
    return out;
}

LinearCircuit::LinearCircuit(std::size_t qubits, std::vector<LinearGate> gates,
                             std::vector<std::optional<QubitOrigin>> origins)
    : qubits_(qubits), gates_(std::move(gates)), origins_(std::move(origins)) {
    if (origins_.empty()) {
        origins_.resize(qubits_);
    } else if (origins_.size() != qubits_) {
        throw Error(ErrorCode::SizeMismatch, "origin count differs from qubit count");
    }
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        const LinearGate &g = gates_[k];
        if (g.control >= qubits_ || g.target >= qubits_) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "gate " + std::to_string(k) + " references a qubit >= " + std::to_string(qubits_));
        }
        if (g.control == g.target) {
            throw Error(ErrorCode::ControlEqualsTarget, "gate " + std::to_string(k) + " has control == target");
        }
        if (k > 0 && gates_[k - 1].time >= g.time) {
            throw Error(ErrorCode::Syntax, "gate times must be strictly increasing");
        }
    }
}

LinearCircuit LinearCircuit::from_pairs(std::size_t qubits,
                                        const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
    std::vector<LinearGate> gates;
    gates.reserve(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        gates.push_back({pairs[k].first, pairs[k].second, k, std::nullopt});
    }
    return LinearCircuit(qubits, std::move(gates));
}

std::vector<std::pair<std::size_t, std::size_t>> LinearCircuit::gate_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(gates_.size());
    for (const auto &g : gates_) {
        out.emplace_back(g.control, g.target);
    }
    return out;
}

LinearCircuit LinearCircuit::without_gate(std::size_t id) const {
    std::vector<LinearGate> kept;
    bool found = false;
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        std::size_t gid = gates_[k].source.value_or(k);
        if (gid == id && !found) {
            found = true;
            continue;
        }
        kept.push_back(gates_[k]);
    }
    if (!found) {
        throw Error(ErrorCode::UnknownGate, "no gate with id " + std::to_string(id));
    }
    return LinearCircuit(qubits_, std::move(kept), origins_);
}

std::vector<Arc> cut_arcs(const CircularCircuit &c, const CutSet &cuts, RadialAngle angle) {
    std::vector<Arc> arcs;
    for (std::size_t w = 0; w < c.wire_count(); ++w) {
        WireId wire{w};
        std::size_t k = c.gap_count(wire);
        std::vector<std::size_t> wire_cuts;
        for (const Gap &g : cuts.gaps()) {
            if (g.wire == wire) {
                wire_cuts.push_back(g.index);
            }
        }
        if (wire_cuts.empty()) {
            continue;
        }
        // Rotate so the first cut is the one at (or clockwise after) the angle.
        std::size_t origin = c.gap_at(wire, angle).index;
        auto first = std::lower_bound(wire_cuts.begin(), wire_cuts.end(), origin);
        std::rotate(wire_cuts.begin(), first == wire_cuts.end() ? wire_cuts.begin() : first, wire_cuts.end());
        for (std::size_t a = 0; a < wire_cuts.size(); ++a) {
            std::size_t start = wire_cuts[a];
            std::size_t end = wire_cuts[(a + 1) % wire_cuts.size()];
            Arc arc{wire, Gap{wire, start}, Gap{wire, end}, {}};
            std::size_t s = (start + 1) % k;
            while (true) {
                arc.symbols.push_back(s);
                if (s == end) {
                    break;
                }
                s = (s + 1) % k;
            }
            arcs.push_back(std::move(arc));
        }
    }
    return arcs;
}

std::vector<CutPoint> enumerate_cut_points(const CircularCircuit &c) {
    std::vector<CutPoint> out;
    out.reserve(c.total_gaps());
    for (std::size_t w = 0; w < c.wire_count(); ++w) {
        for (std::size_t g = 0; g < c.gap_count(WireId{w}); ++g) {
            out.push_back({Gap{WireId{w}, g}});
        }
    }
    return out;
}

std::vector<RadialAngle> radial_angles(const CircularCircuit &c, const CutSet &cuts) {
    std::vector<RadialAngle> out;
    for (std::size_t i = 0; i < c.gate_count(); ++i) {
        bool all = true;
        for (std::size_t w = 0; w < c.wire_count() && all; ++w) {
            all = cuts.contains(c.gap_at(WireId{w}, RadialAngle{i}));
        }
        if (all) {
            out.push_back(RadialAngle{i});
        }
    }
    return out;
}

std::vector<WireId> lifetime_defects(const CircularCircuit &c, const CutSet &cuts, RadialAngle angle) {
    std::vector<WireId> out;
    const std::size_t n = c.gate_count();
    auto time_of = [&](std::size_t gate_index) { return (gate_index + n - (angle.after + 1) % n) % n; };
    std::vector<bool> defective(c.wire_count(), false);
    for (std::size_t w = 0; w < c.wire_count(); ++w) {
        if (cuts.cuts_on(WireId{w}) == 0) {
            defective[w] = true;
        }
    }
    for (const Arc &arc : cut_arcs(c, cuts, angle)) {
        auto syms = c.symbols(arc.wire);
        for (std::size_t k = 1; k < arc.symbols.size(); ++k) {
            if (time_of(syms[arc.symbols[k - 1]].gate_index) >= time_of(syms[arc.symbols[k]].gate_index)) {
                defective[arc.wire.index] = true;
            }
        }
    }
    for (std::size_t w = 0; w < c.wire_count(); ++w) {
        if (defective[w]) {
            out.push_back(WireId{w});
        }
    }
    return out;
}

RadialAngle validate_cut_set(const CircularCircuit &c, const CutSet &cuts) {
    if (cuts.empty()) {
        throw Error(ErrorCode::EmptyCutSet, "cut set is empty");
    }
    for (const Gap &g : cuts.gaps()) {
        if (g.wire.index >= c.wire_count() || g.index >= c.gap_count(g.wire)) {
            throw Error(ErrorCode::UnknownGap, "gap " + std::to_string(g.index) + " on wire " +
                                                   std::to_string(g.wire.index) + " does not exist");
        }
    }
    auto angles = radial_angles(c, cuts);
    if (angles.empty()) {
        // Report the angle that comes closest to being radial.
        std::vector<WireId> best;
        for (std::size_t i = 0; i < c.gate_count(); ++i) {
            std::vector<WireId> missing;
            for (std::size_t w = 0; w < c.wire_count(); ++w) {
                if (!cuts.contains(c.gap_at(WireId{w}, RadialAngle{i}))) {
                    missing.push_back(WireId{w});
                }
            }
            if (i == 0 || missing.size() < best.size()) {
                best = std::move(missing);
            }
        }
        throw Error(ErrorCode::NoRadialCut, "no radial cut; wires lacking a co-radial cut: " + wire_list(best));
    }
    auto defects = lifetime_defects(c, cuts, angles.front());
    if (!defects.empty()) {
        throw Error(ErrorCode::NoRadialCut, "qubit lifetimes wrap on wires " + wire_list(defects));
    }
    return angles.front();
}

LinearCircuit linearize(const CircularCircuit &c, const CutSet &cuts, Direction d) {
    return linearize(c, cuts, d, validate_cut_set(c, cuts));
}

LinearCircuit linearize(const CircularCircuit &c, const CutSet &cuts, Direction d, RadialAngle angle) {
    std::vector<RadialAngle> ok = radial_angles(c, cuts);
    if (std::find(ok.begin(), ok.end(), angle) == ok.end()) {
        validate_cut_set(c, cuts);
        throw Error(ErrorCode::NoRadialCut, "cut set is not radial at angle after gate " + std::to_string(angle.after));
    }
    std::vector<Arc> arcs = cut_arcs(c, cuts, angle);

    std::vector<std::vector<std::size_t>> qubit_of(c.wire_count());
    for (std::size_t w = 0; w < c.wire_count(); ++w) {
        qubit_of[w].resize(c.gap_count(WireId{w}));
    }
    std::vector<std::optional<QubitOrigin>> origins;
    for (std::size_t q = 0; q < arcs.size(); ++q) {
        for (std::size_t s : arcs[q].symbols) {
            qubit_of[arcs[q].wire.index][s] = q;
        }
        origins.emplace_back(QubitOrigin{arcs[q].wire, arcs[q].start, arcs[q].end});
    }

    const std::size_t n = c.gate_count();
    std::vector<LinearGate> gates;
    gates.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t step = d == Direction::Clockwise ? k : n - 1 - k;
        std::size_t gi = (angle.after + 1 + step) % n;
        const CnotGate &g = c.gate(gi);
        gates.push_back({qubit_of[g.control.index][c.symbol_index(g.control, gi)],
                         qubit_of[g.target.index][c.symbol_index(g.target, gi)], k, g.id});
    }
    return LinearCircuit(arcs.size(), std::move(gates), std::move(origins));
}

JoinRecord plan_circularization(const LinearCircuit &l) {
    const std::size_t n = l.qubit_count();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> first(n, none);
    std::vector<std::size_t> last(n, none);
    for (const LinearGate &g : l.gates()) {
        for (std::size_t q : {g.control, g.target}) {
            if (first[q] == none) {
                first[q] = g.time;
            }
            last[q] = g.time;
        }
    }

    JoinRecord rec;
    std::vector<bool> consumed(n, false);
    std::vector<std::size_t> next(n, none);
    std::vector<bool> has_pred(n, false);
    for (std::size_t q = n; q-- > 0;) {
        const std::size_t min = first[q];
        for (std::size_t p = q; p-- > 0;) {
            if (consumed[p]) {
                continue;
            }
            if (last[p] == none || last[p] < min) {
                consumed[p] = true;
                next[p] = q;
                has_pred[q] = true;
                rec.joins.push_back({q, p});
                break;
            }
        }
    }

    rec.wire_of_qubit.assign(n, none);
    for (std::size_t head = 0; head < n; ++head) {
        if (has_pred[head]) {
            continue;
        }
        std::size_t wire = rec.loops.size();
        std::size_t tail = head;
        rec.wire_of_qubit[head] = wire;
        while (next[tail] != none) {
            tail = next[tail];
            rec.wire_of_qubit[tail] = wire;
        }
        rec.loops.push_back({head, tail});
    }
    return rec;
}

std::pair<CircularCircuit, JoinRecord> circularize(const LinearCircuit &l) {
    JoinRecord rec = plan_circularization(l);
    std::vector<CnotGate> gates;
    gates.reserve(l.gate_count());
    std::size_t k = 0;
    for (const LinearGate &g : l.gates()) {
        gates.push_back({g.source.value_or(k), WireId{rec.wire_of_qubit[g.control]},
                         WireId{rec.wire_of_qubit[g.target]}, g.time});
        ++k;
    }
    CircularCircuit c(rec.wire_count(), std::move(gates));
    return {std::move(c), std::move(rec)};
}

bool cyclic_equal(const GatePairs &a, const GatePairs &b, std::span<const std::size_t> rename) {
    if (a.size() != b.size()) {
        return false;
    }
    GatePairs renamed = a;
    if (!rename.empty()) {
        for (auto &[ctl, tgt] : renamed) {
            if (ctl >= rename.size() || tgt >= rename.size()) {
                return false;
            }
            ctl = rename[ctl];
            tgt = rename[tgt];
        }
    }
    const std::size_t n = a.size();
    if (n == 0) {
        return true;
    }
    for (std::size_t r = 0; r < n; ++r) {
        bool same = true;
        for (std::size_t j = 0; j < n && same; ++j) {
            same = b[j] == renamed[(j + r) % n];
        }
        if (same) {
            return true;
        }
    }
    return false;
}

CircularCircuit swap_positions(const CircularCircuit &c, std::size_t first_index, std::size_t second_index) {
    std::vector<CnotGate> gates(c.gates().begin(), c.gates().end());
    std::swap(gates.at(first_index).position, gates.at(second_index).position);
    return CircularCircuit(c.wire_count(), std::move(gates));
}

}  // namespace ccnot
