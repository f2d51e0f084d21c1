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

#include "ccnot/boolean_model.hpp"

#include <algorithm>
#include <sstream>

#include "ccnot/error.hpp"

namespace ccnot {

namespace {

bool splits(ModelKind kind, SymbolKind symbol) {
    switch (kind) {
        case ModelKind::X: return symbol == SymbolKind::Target;
        case ModelKind::Z: return symbol == SymbolKind::Control;
        case ModelKind::Combined: return true;
    }
    return false;
}

void check_gap(const CircularCircuit &c, const Gap &g) {
    if (g.wire.index >= c.wire_count() || g.index >= c.gap_count(g.wire)) {
        throw Error(ErrorCode::UnknownGap, "gap " + std::to_string(g.index) + " on wire " +
                                               std::to_string(g.wire.index) + " does not exist");
    }
}

std::vector<CutSet> combinations_of(const std::vector<CutPoint> &points, std::size_t k) {
    std::vector<CutSet> out;
    if (k > points.size()) {
        return out;
    }
    std::vector<std::size_t> pick(k);
    for (std::size_t j = 0; j < k; ++j) {
        pick[j] = j;
    }
    while (true) {
        std::vector<Gap> gaps;
        gaps.reserve(k);
        for (std::size_t j : pick) {
            gaps.push_back(points[j].gap);
        }
        out.push_back(CutSet::from_gaps(std::move(gaps)));
        // Advance to the next combination in lexicographic order.
        std::size_t j = k;
        while (j > 0 && pick[j - 1] == points.size() - k + (j - 1)) {
            --j;
        }
        if (j == 0) {
            break;
        }
        ++pick[j - 1];
        for (std::size_t t = j; t < k; ++t) {
            pick[t] = pick[t - 1] + 1;
        }
    }
    return out;
}

}  // namespace

std::size_t BooleanModel::variable_of(const SegmentId &s) const {
    auto it = index_.find(s);
    if (it == index_.end()) {
        throw Error(ErrorCode::IndexOutOfRange, "segment not present in this model");
    }
    return it->second;
}

std::string BooleanModel::variable_name(std::size_t var) const {
    const SegmentId &s = vars_.at(var);
    return "w" + std::to_string(s.wire.index) + "s" + std::to_string(var - wire_offset_[s.wire.index]);
}

std::size_t BooleanModel::first_segment(WireId wire, std::size_t symbol) const {
    const Symbol &sym = circuit_.symbols(wire)[symbol];
    return variable_of({wire, symbol, splits(kind_, sym.kind) ? SegmentPart::Before : SegmentPart::Span});
}

std::size_t BooleanModel::last_segment(WireId wire, std::size_t symbol) const {
    const Symbol &sym = circuit_.symbols(wire)[symbol];
    return variable_of({wire, symbol, splits(kind_, sym.kind) ? SegmentPart::After : SegmentPart::Span});
}

std::optional<std::size_t> BooleanModel::join_at(const Gap &gap) const {
    for (std::size_t k = 0; k < clauses_.size(); ++k) {
        if (clauses_[k].kind == ClauseKind::Join && clauses_[k].gap == gap) {
            return k;
        }
    }
    return std::nullopt;
}

std::size_t BooleanModel::count(ClauseKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(clauses_.begin(), clauses_.end(), [&](const Clause &cl) { return cl.kind == kind; }));
}

BooleanModel build_model(const CircularCircuit &c, ModelKind kind) {
    BooleanModel m(c);
    m.kind_ = kind;
    for (std::size_t w = 0; w < c.wire_count(); ++w) {
        WireId wire{w};
        m.wire_offset_.push_back(m.vars_.size());
        auto syms = c.symbols(wire);
        for (std::size_t s = 0; s < syms.size(); ++s) {
            if (splits(kind, syms[s].kind)) {
                m.vars_.push_back({wire, s, SegmentPart::Before});
                m.vars_.push_back({wire, s, SegmentPart::After});
            } else {
                m.vars_.push_back({wire, s, SegmentPart::Span});
            }
        }
    }
    for (std::size_t v = 0; v < m.vars_.size(); ++v) {
        m.index_.emplace(m.vars_[v], v);
    }

    for (std::size_t gi = 0; gi < c.gate_count(); ++gi) {
        const CnotGate &g = c.gate(gi);
        std::size_t sc = c.symbol_index(g.control, gi);
        std::size_t st = c.symbol_index(g.target, gi);
        Clause cl;
        cl.gate = g.id;
        switch (kind) {
            case ModelKind::X:
                cl.kind = ClauseKind::Cnot;
                cl.vars = {m.variable_of({g.target, st, SegmentPart::Before}),
                           m.variable_of({g.target, st, SegmentPart::After}),
                           m.variable_of({g.control, sc, SegmentPart::Span})};
                break;
            case ModelKind::Z:
                cl.kind = ClauseKind::Cnot;
                cl.vars = {m.variable_of({g.control, sc, SegmentPart::Before}),
                           m.variable_of({g.control, sc, SegmentPart::After}),
                           m.variable_of({g.target, st, SegmentPart::Span})};
                break;
            case ModelKind::Combined:
                cl.kind = ClauseKind::CombinedCnot;
                cl.vars = {m.variable_of({g.control, sc, SegmentPart::Before}),
                           m.variable_of({g.control, sc, SegmentPart::After}),
                           m.variable_of({g.target, st, SegmentPart::Before}),
                           m.variable_of({g.target, st, SegmentPart::After})};
                break;
        }
        m.clauses_.push_back(std::move(cl));
    }

    for (std::size_t w = 0; w < c.wire_count(); ++w) {
        WireId wire{w};
        const std::size_t k = c.gap_count(wire);
        for (std::size_t g = 0; g < k; ++g) {
            std::size_t r = m.last_segment(wire, g);
            std::size_t t = m.first_segment(wire, (g + 1) % k);
            if (r == t) {
                continue;  // ¬s ⊕ s is a tautology
            }
            Clause cl;
            cl.kind = ClauseKind::Join;
            cl.vars = {r, t};
            cl.gap = Gap{wire, g};
            m.clauses_.push_back(std::move(cl));
        }
    }
    return m;
}

BooleanModel build_combined_model(const CircularCircuit &c) { return build_model(c, ModelKind::Combined); }

BooleanModel pin_selector(const BooleanModel &m, bool x) {
    BooleanModel out = m;
    out.selector_ = x;
    return out;
}

BooleanModel apply_cuts(const BooleanModel &m, const CutSet &cuts) {
    BooleanModel out = m;
    std::vector<Gap> all(m.cuts_.gaps().begin(), m.cuts_.gaps().end());
    for (const Gap &g : cuts.gaps()) {
        check_gap(m.circuit_, g);
        if (m.cuts_.contains(g)) {
            throw Error(ErrorCode::DuplicateCut, "gap " + std::to_string(g.index) + " on wire " +
                                                     std::to_string(g.wire.index) + " is already cut");
        }
        all.push_back(g);
    }
    std::erase_if(out.clauses_, [&](const Clause &cl) {
        return cl.kind == ClauseKind::Join && cl.gap && cuts.contains(*cl.gap);
    });
    out.cuts_ = CutSet::from_gaps(std::move(all));
    return out;
}

BooleanModel add_join(const BooleanModel &m, std::size_t r, std::size_t t) {
    if (r >= m.vars_.size() || t >= m.vars_.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "join variable out of range");
    }
    BooleanModel out = m;
    if (r != t) {
        out.clauses_.push_back({ClauseKind::Join, {r, t}, std::nullopt, std::nullopt});
    }
    return out;
}

std::string dump_model(const BooleanModel &m) {
    std::ostringstream out;
    for (const Clause &cl : m.clauses()) {
        switch (cl.kind) {
            case ClauseKind::Cnot: out << 'C'; break;
            case ClauseKind::Join: out << 'J'; break;
            case ClauseKind::CombinedCnot: out << 'F'; break;
        }
        for (std::size_t v : cl.vars) {
            out << ' ' << m.variable_name(v);
        }
        out << '\n';
    }
    return out.str();
}

void ParitySystem::add_equation(std::span<const std::size_t> vars, bool constant) {
    gf2::BitRow row(vars_ + 1);
    for (std::size_t v : vars) {
        if (v >= vars_) {
            throw Error(ErrorCode::IndexOutOfRange, "equation variable out of range");
        }
        row.flip(v);
    }
    row.set(vars_, constant);
    rows_.push_back(std::move(row));
}

std::size_t ParitySystem::rank() const { return gf2::reduce(rows_, vars_).pivots.size(); }

bool ParitySystem::homogeneous() const {
    return std::none_of(rows_.begin(), rows_.end(), [&](const gf2::BitRow &r) { return r.get(vars_); });
}

bool ParitySystem::satisfied_by(const std::vector<bool> &assignment) const {
    if (assignment.size() != vars_) {
        throw Error(ErrorCode::SizeMismatch, "assignment size differs from variable count");
    }
    for (const auto &row : rows_) {
        bool parity = row.get(vars_);
        for (std::size_t v = 0; v < vars_; ++v) {
            if (row.get(v) && assignment[v]) {
                parity = !parity;
            }
        }
        if (parity) {
            return false;
        }
    }
    return true;
}

ParitySystem ParitySystem::restricted(std::span<const Pin> pins) const {
    ParitySystem out = *this;
    for (auto &row : out.rows_) {
        for (const Pin &p : pins) {
            if (row.get(p.var)) {
                row.set(p.var, false);
                if (p.value) {
                    row.flip(vars_);
                }
            }
        }
    }
    return out;
}

std::vector<gf2::BitRow> ParitySystem::kernel_basis() const {
    gf2::Echelon e = gf2::reduce(rows_, vars_);
    std::vector<bool> is_pivot(vars_, false);
    for (std::size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<gf2::BitRow> basis;
    for (std::size_t f = 0; f < vars_; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        gf2::BitRow v(vars_);
        v.set(f, true);
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            if (e.rows[r].get(f)) {
                v.set(e.pivots[r], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string ParitySystem::dump() const {
    std::string out;
    for (const auto &row : rows_) {
        for (std::size_t v = 0; v <= vars_; ++v) {
            if (v == vars_) {
                out.push_back(' ');
            }
            out.push_back(row.get(v) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

ParitySystem to_parity_system(const BooleanModel &m) {
    ParitySystem s(m.variables().size());
    for (const Clause &cl : m.clauses()) {
        if (cl.kind != ClauseKind::CombinedCnot) {
            s.add_equation(cl.vars, false);
            continue;
        }
        if (!m.selector()) {
            throw Error(ErrorCode::UnpinnedSelector, "combined model needs its selector pinned");
        }
        const std::size_t a = cl.vars[0], b = cl.vars[1], c = cl.vars[2], d = cl.vars[3];
        if (*m.selector()) {
            s.add_equation(std::vector<std::size_t>{a, c, d}, false);
            s.add_equation(std::vector<std::size_t>{a, b}, false);
        } else {
            s.add_equation(std::vector<std::size_t>{c, a, b}, false);
            s.add_equation(std::vector<std::size_t>{c, d}, false);
        }
    }
    return s;
}

std::vector<bool> propagate(const ParitySystem &s, std::span<const Pin> inputs) {
    const std::size_t n = s.variable_count();
    std::vector<gf2::BitRow> rows(s.rows().begin(), s.rows().end());
    for (const Pin &p : inputs) {
        if (p.var >= n) {
            throw Error(ErrorCode::IndexOutOfRange, "pinned variable out of range");
        }
        gf2::BitRow r(n + 1);
        r.set(p.var, true);
        r.set(n, p.value);
        rows.push_back(std::move(r));
    }
    gf2::Echelon e = gf2::reduce(std::move(rows), n);
    for (const auto &left : e.leftovers) {
        if (left.get(n)) {
            throw Error(ErrorCode::Inconsistent, "pinned assignment contradicts the parity system");
        }
    }
    if (e.pivots.size() < n) {
        throw Error(ErrorCode::Underdetermined,
                    std::to_string(n - e.pivots.size()) + " variable(s) remain free after pinning");
    }
    std::vector<bool> out(n, false);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        out[e.pivots[r]] = e.rows[r].get(n);
    }
    return out;
}

std::vector<QubitBoundary> arc_boundaries(const BooleanModel &m, std::span<const Arc> arcs, Direction d) {
    std::vector<QubitBoundary> out;
    out.reserve(arcs.size());
    for (const Arc &arc : arcs) {
        std::size_t head = m.first_segment(arc.wire, arc.symbols.front());
        std::size_t tail = m.last_segment(arc.wire, arc.symbols.back());
        if (d == Direction::Clockwise) {
            out.push_back({head, tail});
        } else {
            out.push_back({tail, head});
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> solve_images(const BooleanModel &m, std::span<const QubitBoundary> qubits,
                                                   std::span<const Pin> extra) {
    ParitySystem s = to_parity_system(m);
    std::vector<std::vector<std::size_t>> images(qubits.size());
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        if (!qubits[j].input) {
            images[j] = {j};
            continue;
        }
        std::vector<Pin> pins(extra.begin(), extra.end());
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            if (qubits[i].input) {
                pins.push_back({*qubits[i].input, i == j});
            }
        }
        std::vector<bool> value = propagate(s, pins);
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            if (qubits[i].output && value[*qubits[i].output]) {
                images[j].push_back(i);
            }
        }
    }
    return images;
}

StabiliserMap derive_transformations(const CircularCircuit &c, const CutSet &cuts, Direction d) {
    RadialAngle angle = validate_cut_set(c, cuts);
    std::vector<Arc> arcs = cut_arcs(c, cuts, angle);
    StabiliserMap out(arcs.size());
    for (ModelKind kind : {ModelKind::X, ModelKind::Z}) {
        BooleanModel m = apply_cuts(build_model(c, kind), cuts);
        auto images = solve_images(m, arc_boundaries(m, arcs, d));
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

StabiliserMap derive_transformations_combined(const CircularCircuit &c, const CutSet &cuts, Direction d) {
    RadialAngle angle = validate_cut_set(c, cuts);
    std::vector<Arc> arcs = cut_arcs(c, cuts, angle);
    BooleanModel cut = apply_cuts(build_combined_model(c), cuts);
    auto bounds = arc_boundaries(cut, arcs, d);
    auto x_images = solve_images(pin_selector(cut, true), bounds);
    auto z_images = solve_images(pin_selector(cut, false), bounds);
    StabiliserMap out(arcs.size());
    for (std::size_t q = 0; q < arcs.size(); ++q) {
        out.set_x_image(q, std::move(x_images[q]));
        out.set_z_image(q, std::move(z_images[q]));
    }
    return out;
}

namespace {

// Solution space of a cut model projected onto its qubit boundaries, in
// reduced echelon form so two relations compare by equality.
std::vector<gf2::BitRow> boundary_relation(const CircularCircuit &c, ModelKind kind, RadialAngle angle) {
    std::vector<Gap> gaps;
    for (std::size_t w = 0; w < c.wire_count(); ++w) {
        gaps.push_back(c.gap_at(WireId{w}, angle));
    }
    CutSet cuts = CutSet::from_gaps(std::move(gaps));
    BooleanModel m = apply_cuts(build_model(c, kind), cuts);
    std::vector<Arc> arcs = cut_arcs(c, cuts, angle);
    auto bounds = arc_boundaries(m, arcs, Direction::Clockwise);
    std::vector<std::size_t> columns;
    for (const auto &b : bounds) {
        columns.push_back(*b.input);
        columns.push_back(*b.output);
    }
    std::vector<gf2::BitRow> projected;
    for (const auto &v : to_parity_system(m).kernel_basis()) {
        gf2::BitRow p(columns.size());
        for (std::size_t k = 0; k < columns.size(); ++k) {
            p.set(k, v.get(columns[k]));
        }
        projected.push_back(std::move(p));
    }
    return gf2::reduce(std::move(projected), columns.size()).rows;
}

}  // namespace

bool check_commutation_invariance(const CircularCircuit &c, std::size_t gate1, std::size_t gate2) {
    auto i1 = c.index_of(gate1);
    auto i2 = c.index_of(gate2);
    if (!i1 || !i2) {
        throw Error(ErrorCode::UnknownGate, "unknown gate id");
    }
    const std::size_t n = c.gate_count();
    std::size_t first;
    if (n >= 2 && *i1 != *i2 && (*i1 + 1) % n == *i2) {
        first = *i1;
    } else if (n >= 2 && *i1 != *i2 && (*i2 + 1) % n == *i1) {
        first = *i2;
    } else {
        throw Error(ErrorCode::NotAdjacent, "gates " + std::to_string(gate1) + " and " + std::to_string(gate2) +
                                                " are not adjacent in cyclic order");
    }
    CircularCircuit swapped = swap_positions(c, *i1, *i2);
    // Cut radially just before the pair so both orders are linear there.
    RadialAngle angle{(first + n - 1) % n};
    for (ModelKind kind : {ModelKind::X, ModelKind::Z}) {
        if (boundary_relation(c, kind, angle) != boundary_relation(swapped, kind, angle)) {
            return false;
        }
    }
    return true;
}

std::vector<CutSet> enumerate_cut_sets(const CircularCircuit &c, std::size_t min_size, std::size_t max_size) {
    std::vector<CutPoint> points = enumerate_cut_points(c);
    std::vector<CutSet> out;
    for (std::size_t k = std::max<std::size_t>(min_size, 1); k <= std::min(max_size, points.size()); ++k) {
        auto sets = combinations_of(points, k);
        out.insert(out.end(), std::make_move_iterator(sets.begin()), std::make_move_iterator(sets.end()));
    }
    return out;
}

std::vector<SearchHit> search_cuts(const CircularCircuit &c, const StabiliserMap &target, std::size_t max_cuts) {
    if (max_cuts < c.wire_count()) {
        throw Error(ErrorCode::BudgetTooSmall, "max cuts " + std::to_string(max_cuts) + " is below the wire count " +
                                                   std::to_string(c.wire_count()));
    }
    std::vector<SearchHit> hits;
    // Each cut yields one qubit, so only sets of the target's size can match.
    const std::size_t size = target.qubit_count();
    if (size < c.wire_count() || size > max_cuts) {
        return hits;
    }
    for (const CutSet &cuts : enumerate_cut_sets(c, size, size)) {
        if (radial_angles(c, cuts).empty()) {
            continue;
        }
        for (Direction d : {Direction::Clockwise, Direction::CounterClockwise}) {
            if (derive_transformations(c, cuts, d) == target) {
                hits.push_back({cuts, d});
            }
        }
    }
    return hits;
}

}  // namespace ccnot
