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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ccnot {

struct WireId {
    std::size_t index = 0;

    auto operator<=>(const WireId &) const = default;
};

struct CnotGate {
    std::size_t id = 0;
    WireId control;
    WireId target;
    std::size_t position = 0;

    bool operator==(const CnotGate &) const = default;
};

enum class SymbolKind { Control, Target };

/// One gate symbol (• or ⊕) as it appears on a circular wire.
struct Symbol {
    std::size_t gate_index = 0;  ///< index into CircularCircuit::gates()
    SymbolKind kind = SymbolKind::Control;
};

/// A gap sits after symbol `index` (clockwise) on `wire` and before the next one.
struct Gap {
    WireId wire;
    std::size_t index = 0;

    auto operator<=>(const Gap &) const = default;
};

struct CutPoint {
    Gap gap;

    auto operator<=>(const CutPoint &) const = default;
};

enum class Direction { Clockwise, CounterClockwise };

/// An angle strictly between the gate at sorted index `after` and the next one
/// (cyclically).
struct RadialAngle {
    std::size_t after = 0;

    auto operator<=>(const RadialAngle &) const = default;
};

/// CNOT gates on closed wires. Gates are kept sorted by position; positions are
/// a cyclic temporal order, so the last gate is followed by the first one.
class CircularCircuit {
  public:
    /// Throws WireOutOfRange, ControlEqualsTarget, EmptyWire, or Syntax for
    /// repeated positions.
    CircularCircuit(std::size_t wires, std::vector<CnotGate> gates);

    /// Gate k gets id k and position k.
    static CircularCircuit from_pairs(std::size_t wires,
                                      const std::vector<std::pair<std::size_t, std::size_t>> &pairs);

    std::size_t wire_count() const noexcept { return wires_; }
    std::size_t gate_count() const noexcept { return gates_.size(); }
    std::span<const CnotGate> gates() const noexcept { return gates_; }
    const CnotGate &gate(std::size_t index) const { return gates_.at(index); }

    /// Sorted index of the gate with identifier `id`, or nullopt.
    std::optional<std::size_t> index_of(std::size_t id) const;

    /// Symbols of `wire` in clockwise order.
    std::span<const Symbol> symbols(WireId wire) const { return symbols_.at(wire.index); }
    std::size_t gap_count(WireId wire) const { return symbols_.at(wire.index).size(); }
    std::size_t total_gaps() const noexcept;

    /// Index within symbols(wire) of the symbol of gate `gate_index`.
    std::size_t symbol_index(WireId wire, std::size_t gate_index) const;

    /// The gap on `wire` whose span contains `angle`.
    Gap gap_at(WireId wire, RadialAngle angle) const;

    std::vector<std::pair<std::size_t, std::size_t>> gate_pairs() const;

    bool operator==(const CircularCircuit &other) const {
        return wires_ == other.wires_ && gates_ == other.gates_;
    }

  private:
    std::size_t wires_;
    std::vector<CnotGate> gates_;
    std::vector<std::vector<Symbol>> symbols_;
};

/// Cuts occupy distinct gaps. Kept sorted by (wire, index).
class CutSet {
  public:
    CutSet() = default;

    /// Throws DuplicateCut when a gap repeats.
    static CutSet from_gaps(std::vector<Gap> gaps);

    std::span<const Gap> gaps() const noexcept { return gaps_; }
    std::size_t size() const noexcept { return gaps_.size(); }
    bool empty() const noexcept { return gaps_.empty(); }
    bool contains(const Gap &gap) const;
    std::size_t cuts_on(WireId wire) const;

    /// Copy with `gap` added; no-op when present.
    CutSet with(const Gap &gap) const;

    bool operator==(const CutSet &) const = default;

  private:
    std::vector<Gap> gaps_;
};

/// Where a linear qubit came from on the circular circuit: the arc that starts
/// right after cut `start` and ends at cut `end` (clockwise).
struct QubitOrigin {
    WireId wire;
    Gap start;
    Gap end;

    bool operator==(const QubitOrigin &) const = default;
};

struct LinearGate {
    std::size_t control = 0;
    std::size_t target = 0;
    std::size_t time = 0;
    std::optional<std::size_t> source;  ///< id of the circular gate, when linearized

    bool operator==(const LinearGate &) const = default;
};

class LinearCircuit {
  public:
    /// Throws IndexOutOfRange, ControlEqualsTarget, or Syntax for
    /// non-increasing times.
    LinearCircuit(std::size_t qubits, std::vector<LinearGate> gates,
                  std::vector<std::optional<QubitOrigin>> origins = {});

    /// Gate k runs at time k.
    static LinearCircuit from_pairs(std::size_t qubits,
                                    const std::vector<std::pair<std::size_t, std::size_t>> &pairs);

    std::size_t qubit_count() const noexcept { return qubits_; }
    std::size_t gate_count() const noexcept { return gates_.size(); }
    std::span<const LinearGate> gates() const noexcept { return gates_; }
    const std::optional<QubitOrigin> &origin(std::size_t qubit) const { return origins_.at(qubit); }

    std::vector<std::pair<std::size_t, std::size_t>> gate_pairs() const;

    /// Copy without the gate whose `source` (or listing index when unset) is `id`.
    LinearCircuit without_gate(std::size_t id) const;

    bool operator==(const LinearCircuit &) const = default;

  private:
    std::size_t qubits_;
    std::vector<LinearGate> gates_;
    std::vector<std::optional<QubitOrigin>> origins_;
};

/// A stretch of circular wire between two consecutive cuts.
struct Arc {
    WireId wire;
    Gap start;  ///< cut preceding the arc (clockwise)
    Gap end;    ///< cut closing the arc
    std::vector<std::size_t> symbols;  ///< symbol indices on the wire, clockwise
};

/// Qubits of a cut circuit, ordered by wire and then clockwise from `angle`.
std::vector<Arc> cut_arcs(const CircularCircuit &c, const CutSet &cuts, RadialAngle angle);

std::vector<CutPoint> enumerate_cut_points(const CircularCircuit &c);

/// Every angle at which all wires are cut, in increasing order.
std::vector<RadialAngle> radial_angles(const CircularCircuit &c, const CutSet &cuts);

/// Returns the first radial angle of a valid cut set. Throws EmptyCutSet,
/// UnknownGap, or NoRadialCut.
RadialAngle validate_cut_set(const CircularCircuit &c, const CutSet &cuts);

/// Wires whose qubit lifetimes would not be intervals when traversal starts at
/// `angle`: uncut wires, and arcs running across the starting angle. Empty iff
/// the cut set linearizes cleanly from there.
std::vector<WireId> lifetime_defects(const CircularCircuit &c, const CutSet &cuts, RadialAngle angle);

LinearCircuit linearize(const CircularCircuit &c, const CutSet &cuts, Direction d);
/// Same, starting from `angle`; throws NoRadialCut unless every wire is cut there.
LinearCircuit linearize(const CircularCircuit &c, const CutSet &cuts, Direction d, RadialAngle angle);

/// Joins produced while closing a linear circuit into circular wires.
struct JoinRecord {
    struct Join {
        std::size_t consumer = 0;  ///< qubit whose input endpoint is joined
        std::size_t producer = 0;  ///< qubit whose output endpoint feeds it

        bool operator==(const Join &) const = default;
    };

    std::vector<Join> joins;  ///< cross-joins chosen by the closest-upper-qubit rule
    std::vector<Join> loops;  ///< closures: chain head input <- chain tail output
    std::vector<std::size_t> wire_of_qubit;

    std::size_t wire_count() const noexcept { return loops.size(); }

    bool operator==(const JoinRecord &) const = default;
};

/// Join plan for `l`. Total; qubits with no symbols still get an entry.
JoinRecord plan_circularization(const LinearCircuit &l);

/// Throws EmptyWire when a resulting wire carries no symbol.
std::pair<CircularCircuit, JoinRecord> circularize(const LinearCircuit &l);

using GatePairs = std::vector<std::pair<std::size_t, std::size_t>>;

/// True iff `b` equals a rotation of `a` after renaming a's wires through
/// `rename` (identity when empty).
bool cyclic_equal(const GatePairs &a, const GatePairs &b, std::span<const std::size_t> rename = {});

/// Copy of `c` with the positions of two gates exchanged.
CircularCircuit swap_positions(const CircularCircuit &c, std::size_t first_index, std::size_t second_index);

}  // namespace ccnot
