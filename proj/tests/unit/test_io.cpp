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
#include <regex>

#include "ccnot/circuit_io.hpp"
#include "ccnot/dot_export.hpp"
#include "ccnot/error.hpp"
#include "ccnot/serialize.hpp"
#include "oracles.hpp"

using namespace ccnot;
using ccnot::testing::Pairs;

namespace {

std::string error_text(auto &&f) {
    try {
        f();
    } catch (const Error &e) {
        return std::string(error_name(e.code())) + ": " + e.what();
    }
    return "no error";
}

std::size_t count(const std::string &s, const std::string &needle) {
    std::size_t n = 0;
    for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("format detection and comments") {
    CHECK(detect_format("# c\ncircular\nwires 1") == CircuitFormat::Circular);
    CHECK(detect_format("linear") == CircuitFormat::Linear);
    CHECK(detect_format("icm") == CircuitFormat::Icm);
    CHECK(detect_format("program") == CircuitFormat::Program);
    CHECK(error_text([] { detect_format("bogus"); }) == "SyntaxError: line 1: unknown header 'bogus'");
    CircularCircuit c = parse_circular("circular  # header\nwires 2\n\ncnot 0 1 # first\ncnot 1 0\n");
    CHECK(c.gate_pairs() == Pairs{{0, 1}, {1, 0}});
}

TEST_CASE("syntax errors carry line numbers") {
    CHECK(error_text([] { parse_linear("linear\nwires 2\ncnot 0\n"); }) ==
          "SyntaxError: line 3: 'cnot' takes 2 operand(s)");
    CHECK(error_text([] { parse_linear("linear\nwires 2\ncnot 0 x\n"); }) ==
          "SyntaxError: line 3: expected a number, got 'x'");
    CHECK(error_text([] { parse_linear("linear\nwires 2\nswap 0 1\n"); }) ==
          "SyntaxError: line 3: unknown statement 'swap'");
    CHECK(error_text([] { parse_linear("circular\nwires 2\n"); }) == "SyntaxError: line 1: expected header 'linear'");
    CHECK(error_text([] { parse_linear("linear\ncnot 0 1\n"); }).find("line 2") != std::string::npos);
    CHECK(error_text([] { parse_cuts("cut 0\n"); }) == "SyntaxError: line 1: 'cut' takes 2 operand(s)");
    CHECK(error_text([] { parse_cuts("cut 0 1\ndirection up\n"); }) ==
          "SyntaxError: line 2: direction must be cw or ccw");
    CHECK(error_text([] { parse_cuts("cut 0 1\ncut 0 1\n"); }).rfind("DuplicateCut", 0) == 0);
    CHECK(error_text([] { parse_fault(""); }).rfind("SyntaxError", 0) == 0);
    CHECK(error_text([] { parse_program("program\nqubits 1\nrz 0\n"); }).rfind("UnknownGate", 0) == 0);
}

TEST_CASE("circuit text round trips") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        CircularCircuit c = testing::random_circular(rng, 5, 10);
        CHECK(parse_circular(format_circuit(c)) == c);
        LinearCircuit l = LinearCircuit::from_pairs(c.wire_count(), c.gate_pairs());
        CHECK(parse_linear(format_circuit(l)) == l);
    }
    CircularCircuit moved = swap_positions(CircularCircuit::from_pairs(2, {{0, 1}, {1, 0}}), 0, 1);
    CHECK(parse_circular(format_circuit(moved)) == moved);
}

TEST_CASE("cut files") {
    CutFile f = parse_cuts("cut 0 2; cut 1 2\ndirection ccw\n");
    CHECK(f.cuts.size() == 2);
    CHECK(f.direction == Direction::CounterClockwise);
    CutFile g = parse_cuts(format_cuts(f.cuts, f.direction));
    CHECK(g.cuts == f.cuts);
    CHECK(g.direction == f.direction);
    CHECK(parse_cuts("cut 1 0").direction == Direction::Clockwise);
    CHECK(parse_fault("# fault\nsmgf 4\n").gate == 4);
}

TEST_CASE("icm and program files") {
    IcmCircuit rc = parse_icm(R"(icm
qubits 4
cnot 1 0; cnot 2 1; cnot 1 3
init 0 in:c
init 1 plus
init 2 in:t
init 3 zero
measure 0 z
measure 1 x
)");
    CHECK(rc == gadget(GadgetKind::RemoteCnot));
    for (GadgetKind k : {GadgetKind::Teleport, GadgetKind::T, GadgetKind::P, GadgetKind::V, GadgetKind::Bell,
                         GadgetKind::MeasureZ, GadgetKind::RemoteCnot, GadgetKind::Sdt}) {
        CHECK(parse_icm(format_icm(gadget(k))) == gadget(k));
    }
    CHECK(error_text([] { parse_icm("icm\nqubits 1\n"); }).rfind("SyntaxError", 0) == 0);
    CHECK(error_text([] { parse_icm("icm\nqubits 1\ninit 0 zero\n"); }).rfind("InvalidAncillaConfig", 0) != 0);
    CHECK(error_text([] { parse_icm("icm\nqubits 1\ninit 0 in:a\nmeasure 0 cfg:z/q\n"); }) ==
          "SyntaxError: line 4: unknown measurement 'cfg:z/q'");

    Program p = parse_program("program\nqubits 2\nh 1\ncnot 0 1\ntdg 1\n");
    CHECK(p.ops.size() == 3);
    CHECK(p.ops[1] == LogicalOp{LogicalGate::Cnot, 0, 1});
    CHECK(format_program(parse_program(format_program(p))) == format_program(p));
}

TEST_CASE("json round trips") {
    CircularCircuit c = CircularCircuit::from_pairs(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(circular_from_json(to_json(c)) == c);
    LinearCircuit l = LinearCircuit::from_pairs(3, {{0, 2}, {2, 1}});
    CHECK(linear_from_json(to_json(l)) == l);
    CutSet s = parse_cuts("cut 0 2\ncut 1 2").cuts;
    CutFile back = cuts_from_json(to_json(s, Direction::CounterClockwise));
    CHECK(back.cuts == s);
    CHECK(back.direction == Direction::CounterClockwise);
    StabiliserMap m = StabiliserMap::single_cnot(3, 2, 0);
    CHECK(map_from_json(to_json(m)) == m);
    CHECK(to_json(gadget(GadgetKind::T)).find("\"in:phi\"") != std::string::npos);
    CHECK(to_json(circularize(l).second).find("wire_of_qubit") != std::string::npos);

    CHECK(error_text([] { circular_from_json("{"); }).rfind("SyntaxError", 0) == 0);
    CHECK(error_text([] { circular_from_json(R"({"type":"linear"})"); }).rfind("SyntaxError", 0) == 0);
    CHECK(error_text([] { circular_from_json(R"({"type":"circular","wires":2})"); }).rfind("SyntaxError", 0) == 0);
    CHECK(error_text([] { map_from_json(R"({"type":"map","qubits":1,"x":[[3]],"z":[[0]]})"); })
              .rfind("IndexOutOfRange", 0) == 0);
}

TEST_CASE("dot export") {
    CircularCircuit c = CircularCircuit::from_pairs(2, {{0, 1}, {1, 0}, {0, 1}});
    std::string dot = to_dot(c);
    CHECK(dot.rfind("digraph circular {", 0) == 0);
    CHECK(count(dot, "subgraph cluster_w") == 2);
    CHECK(count(dot, "color=blue") == 3);
    CHECK(count(dot, "[shape=box") == 0);
    CHECK(dot == to_dot(c));

    std::string cut = to_dot(c, parse_cuts("cut 0 2\ncut 1 2").cuts);
    CHECK(count(cut, "[shape=box") == 2);

    LinearCircuit l = LinearCircuit::from_pairs(2, {{0, 1}, {1, 0}, {0, 1}});
    std::string ld = to_dot(l);
    CHECK(count(ld, "[shape=plaintext, label=\"q") == 2);
    CHECK(count(ld, "color=blue") == 3);
    // Every wire node of a circular wire has exactly one outgoing wire edge.
    std::regex edge(R"(w(\d)s(\d) -> (w\ds\d|cut_w\dg\d) \[)");
    std::size_t edges = std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge), std::sregex_iterator());
    CHECK(edges == 6 + 3);
}
