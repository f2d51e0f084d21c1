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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccnot/circuit.hpp"
#include "ccnot/gf2.hpp"
#include "ccnot/stabiliser_map.hpp"

namespace ccnot {

enum class ModelKind { X, Z, Combined };

enum class SegmentPart {
    Span,    ///< runs over a symbol that does not split the wire in this model
    Before,  ///< ends at a splitting symbol
    After,   ///< starts at a splitting symbol
};

/// A wire segment, named by the symbol it touches. Every segment lies between
/// two gaps of its wire, so (wire, symbol, part) is unique.
struct SegmentId {
    WireId wire;
    std::size_t symbol = 0;
    SegmentPart part = SegmentPart::Span;

    auto operator<=>(const SegmentId &) const = default;
};

enum class ClauseKind { Cnot, Join, CombinedCnot };

/// Variables by clause kind:
///   Cnot:         {a, b, crossing}       a + b + crossing = 0
///   Join:         {r, t}                 r + t = 0
///   CombinedCnot: {a, b, c, d}           control before/after, target before/after
struct Clause {
    ClauseKind kind = ClauseKind::Cnot;
    std::vector<std::size_t> vars;
    std::optional<std::size_t> gate;  ///< gate id for CNOT clauses
    std::optional<Gap> gap;           ///< source gap for joins
};

class BooleanModel {
  public:
    ModelKind kind() const noexcept { return kind_; }
    const CircularCircuit &circuit() const noexcept { return circuit_; }
    std::span<const SegmentId> variables() const noexcept { return vars_; }
    std::span<const Clause> clauses() const noexcept { return clauses_; }
    const CutSet &cuts() const noexcept { return cuts_; }
    std::optional<bool> selector() const noexcept { return selector_; }

    std::size_t variable_of(const SegmentId &s) const;
    /// `w<wire>s<k>` where k counts segments clockwise along the wire.
    std::string variable_name(std::size_t var) const;

    /// Segment starting at the gap before `symbol` / ending at the gap after it.
    std::size_t first_segment(WireId wire, std::size_t symbol) const;
    std::size_t last_segment(WireId wire, std::size_t symbol) const;

    /// Join clause index for `gap`; nullopt for cut gaps and dropped self-joins.
    std::optional<std::size_t> join_at(const Gap &gap) const;

    std::size_t count(ClauseKind kind) const;

  private:
    friend BooleanModel build_model(const CircularCircuit &, ModelKind);
    friend BooleanModel apply_cuts(const BooleanModel &, const CutSet &);
    friend BooleanModel pin_selector(const BooleanModel &, bool);
    friend BooleanModel add_join(const BooleanModel &, std::size_t, std::size_t);

    explicit BooleanModel(CircularCircuit c) : circuit_(std::move(c)) {}

    ModelKind kind_ = ModelKind::X;
    CircularCircuit circuit_;
    std::vector<SegmentId> vars_;
    std::map<SegmentId, std::size_t> index_;
    std::vector<std::size_t> wire_offset_;  ///< first variable of each wire
    std::vector<Clause> clauses_;
    CutSet cuts_;
    std::optional<bool> selector_;
};

/// X, Z, or combined model of an uncut circular circuit. In the X model only
/// target symbols split a wire, in the Z model only controls, and in the
/// combined model both.
BooleanModel build_model(const CircularCircuit &c, ModelKind kind);
BooleanModel build_combined_model(const CircularCircuit &c);

/// Fix the selector of a combined model: true tracks X, false tracks Z.
BooleanModel pin_selector(const BooleanModel &m, bool x);

/// Drop the join clauses of the cut gaps. Throws UnknownGap, or DuplicateCut
/// for a gap that is already cut.
BooleanModel apply_cuts(const BooleanModel &m, const CutSet &cuts);

/// Add an extra equivalence r = t between two variables.
BooleanModel add_join(const BooleanModel &m, std::size_t r, std::size_t t);

/// One clause per line: `C a b X`, `J r t`, or `F a b c d` (combined).
std::string dump_model(const BooleanModel &m);

struct Pin {
    std::size_t var = 0;
    bool value = false;
};

/// Linear system over GF(2): each row is a parity of variables equal to a
/// constant. Row bit `variable_count()` holds the constant.
class ParitySystem {
  public:
    explicit ParitySystem(std::size_t vars) : vars_(vars) {}

    void add_equation(std::span<const std::size_t> vars, bool constant);

    std::size_t variable_count() const noexcept { return vars_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::span<const gf2::BitRow> rows() const noexcept { return rows_; }

    std::size_t rank() const;
    bool homogeneous() const;
    bool satisfied_by(const std::vector<bool> &assignment) const;

    /// Substitute pinned values; pinned columns become zero and their
    /// contribution moves into the constant.
    ParitySystem restricted(std::span<const Pin> pins) const;

    /// Basis of the solution space of the homogeneous part, one row per free
    /// variable.
    std::vector<gf2::BitRow> kernel_basis() const;

    /// Rows of 0/1 with the constant last.
    std::string dump() const;

  private:
    std::size_t vars_;
    std::vector<gf2::BitRow> rows_;
};

/// Throws UnpinnedSelector for a combined model without a pinned selector.
ParitySystem to_parity_system(const BooleanModel &m);

/// Unique completion of the pinned assignment. Throws Inconsistent or
/// Underdetermined.
std::vector<bool> propagate(const ParitySystem &s, std::span<const Pin> inputs);

/// Boundary variables of one qubit. A qubit without any variable (all of its
/// symbols detached) is an identity wire.
struct QubitBoundary {
    std::optional<std::size_t> input;
    std::optional<std::size_t> output;
};

/// Input/output variables of each arc for the given traversal direction.
std::vector<QubitBoundary> arc_boundaries(const BooleanModel &m, std::span<const Arc> arcs, Direction d);

/// For each qubit, the qubits whose outputs become true when only that qubit's
/// input is true. `extra` pins additional variables (e.g. fault ancillas).
std::vector<std::vector<std::size_t>> solve_images(const BooleanModel &m, std::span<const QubitBoundary> qubits,
                                                   std::span<const Pin> extra = {});

StabiliserMap derive_transformations(const CircularCircuit &c, const CutSet &cuts, Direction d);

/// Same, computed from the combined model with the selector pinned each way.
StabiliserMap derive_transformations_combined(const CircularCircuit &c, const CutSet &cuts, Direction d);

/// Whether swapping two cyclically adjacent gates (by id) leaves the X and Z
/// boundary relations unchanged. Throws NotAdjacent or UnknownGate.
bool check_commutation_invariance(const CircularCircuit &c, std::size_t gate1, std::size_t gate2);

struct SearchHit {
    CutSet cuts;
    Direction direction = Direction::Clockwise;

    bool operator==(const SearchHit &) const = default;
};

/// All valid cut sets with at most `max_cuts` cuts, in both directions, whose
/// derived map equals `target`. Ordered by size, then lexicographically by
/// gaps, clockwise before counter-clockwise. Throws BudgetTooSmall.
std::vector<SearchHit> search_cuts(const CircularCircuit &c, const StabiliserMap &target, std::size_t max_cuts);

/// Every cut set of size in [min_size, max_size] in search order.
std::vector<CutSet> enumerate_cut_sets(const CircularCircuit &c, std::size_t min_size, std::size_t max_size);

}  // namespace ccnot
