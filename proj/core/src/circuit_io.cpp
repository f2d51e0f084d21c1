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

#include "ccnot/circuit_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "ccnot/error.hpp"

namespace ccnot {

namespace {

struct Statement {
    std::size_t line = 0;
    std::vector<std::string> words;
};

std::vector<Statement> tokenize(std::string_view text) {
    std::vector<Statement> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t semi = line.find(';', start);
            if (semi == std::string_view::npos) semi = line.size();
            std::istringstream in{std::string(line.substr(start, semi - start))};
            Statement s{line_no, {}};
            for (std::string w; in >> w;) s.words.push_back(w);
            if (!s.words.empty()) out.push_back(std::move(s));
            start = semi + 1;
        }
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string &msg) {
    throw Error(ErrorCode::Syntax, "line " + std::to_string(line) + ": " + msg);
}

std::size_t number(const Statement &s, std::size_t k) {
    if (k >= s.words.size()) fail(s.line, "missing operand for '" + s.words[0] + "'");
    const std::string &w = s.words[k];
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc{} || end != w.data() + w.size()) fail(s.line, "expected a number, got '" + w + "'");
    return v;
}

void arity(const Statement &s, std::size_t n) {
    if (s.words.size() != n + 1) {
        fail(s.line, "'" + s.words[0] + "' takes " + std::to_string(n) + " operand(s)");
    }
}

// Header plus the size line; returns (size, remaining statements).
std::pair<std::size_t, std::vector<Statement>> preamble(std::string_view text, std::string_view header) {
    std::vector<Statement> st = tokenize(text);
    if (st.empty()) fail(1, "empty input");
    if (st[0].words.size() != 1 || st[0].words[0] != header) {
        fail(st[0].line, "expected header '" + std::string(header) + "'");
    }
    if (st.size() < 2 || (st[1].words[0] != "wires" && st[1].words[0] != "qubits")) {
        fail(st.size() < 2 ? st[0].line : st[1].line, "expected 'wires N' or 'qubits N'");
    }
    arity(st[1], 1);
    std::size_t n = number(st[1], 1);
    st.erase(st.begin(), st.begin() + 2);
    return {n, std::move(st)};
}

// Rethrow domain errors raised while building a value with the line attached.
template <typename F>
auto at_line(std::size_t line, F &&f) {
    try {
        return f();
    } catch (const Error &e) {
        throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what());
    }
}

}  // namespace

CircuitFormat detect_format(std::string_view text) {
    std::vector<Statement> st = tokenize(text);
    if (st.empty()) fail(1, "empty input");
    const std::string &h = st[0].words[0];
    if (h == "circular") return CircuitFormat::Circular;
    if (h == "linear") return CircuitFormat::Linear;
    if (h == "icm") return CircuitFormat::Icm;
    if (h == "program") return CircuitFormat::Program;
    fail(st[0].line, "unknown header '" + h + "'");
}

CircularCircuit parse_circular(std::string_view text) {
    auto [wires, st] = preamble(text, "circular");
    std::vector<CnotGate> gates;
    for (const Statement &s : st) {
        if (s.words[0] != "cnot") fail(s.line, "unknown statement '" + s.words[0] + "'");
        if (s.words.size() != 3 && s.words.size() != 5 && s.words.size() != 7) fail(s.line, "malformed cnot");
        CnotGate g{gates.size(), WireId{number(s, 1)}, WireId{number(s, 2)}, gates.size()};
        for (std::size_t k = 3; k + 1 < s.words.size(); k += 2) {
            if (s.words[k] == "pos") {
                g.position = number(s, k + 1);
            } else if (s.words[k] == "id") {
                g.id = number(s, k + 1);
            } else {
                fail(s.line, "unknown cnot attribute '" + s.words[k] + "'");
            }
        }
        if (g.control.index >= wires || g.target.index >= wires) {
            throw Error(ErrorCode::WireOutOfRange, "line " + std::to_string(s.line) + ": wire out of range");
        }
        if (g.control == g.target) {
            throw Error(ErrorCode::ControlEqualsTarget, "line " + std::to_string(s.line) + ": control equals target");
        }
        gates.push_back(g);
    }
    return CircularCircuit(wires, std::move(gates));
}

LinearCircuit parse_linear(std::string_view text) {
    auto [qubits, st] = preamble(text, "linear");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const Statement &s : st) {
        if (s.words[0] != "cnot") fail(s.line, "unknown statement '" + s.words[0] + "'");
        arity(s, 2);
        pairs.emplace_back(number(s, 1), number(s, 2));
        at_line(s.line, [&] { return LinearCircuit::from_pairs(qubits, {pairs.back()}); });
    }
    return LinearCircuit::from_pairs(qubits, pairs);
}

namespace {

std::optional<Basis> basis_from(std::string_view w) {
    if (w == "x") return Basis::X;
    if (w == "y") return Basis::Y;
    if (w == "z") return Basis::Z;
    if (w == "a") return Basis::A;
    return std::nullopt;
}

}  // namespace

IcmCircuit parse_icm(std::string_view text) {
    auto [qubits, st] = preamble(text, "icm");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::optional<InitBasis>> inits(qubits);
    std::vector<MeasBasis> meas(qubits);
    std::vector<bool> measured(qubits, false);
    auto qubit = [&](const Statement &s) {
        std::size_t q = number(s, 1);
        if (q >= qubits) {
            throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(s.line) + ": qubit out of range");
        }
        return q;
    };
    for (const Statement &s : st) {
        const std::string &op = s.words[0];
        if (op == "cnot") {
            arity(s, 2);
            pairs.emplace_back(number(s, 1), number(s, 2));
            at_line(s.line, [&] { return LinearCircuit::from_pairs(qubits, {pairs.back()}); });
        } else if (op == "init") {
            arity(s, 2);
            std::size_t q = qubit(s);
            if (inits[q]) fail(s.line, "qubit initialised twice");
            const std::string &w = s.words[2];
            if (w == "zero" || w == "0") {
                inits[q] = InitBasis::zero();
            } else if (w == "plus" || w == "+") {
                inits[q] = InitBasis::plus();
            } else if (w == "y") {
                inits[q] = InitBasis::y();
            } else if (w == "a") {
                inits[q] = InitBasis::a();
            } else if (w.rfind("in:", 0) == 0 && w.size() > 3) {
                inits[q] = InitBasis::input(w.substr(3));
            } else {
                fail(s.line, "unknown initialisation '" + w + "'");
            }
        } else if (op == "measure") {
            arity(s, 2);
            std::size_t q = qubit(s);
            if (measured[q]) fail(s.line, "qubit measured twice");
            measured[q] = true;
            const std::string &w = s.words[2];
            if (w == "none") {
                meas[q] = MeasBasis::none();
            } else if (auto b = basis_from(w)) {
                meas[q] = MeasBasis::in(*b);
            } else if (w.rfind("cfg:", 0) == 0 && w.size() == 7 && w[5] == '/') {
                auto b1 = basis_from(w.substr(4, 1));
                auto b2 = basis_from(w.substr(6, 1));
                if (!b1 || !b2) fail(s.line, "unknown measurement '" + w + "'");
                meas[q] = MeasBasis::configurable(*b1, *b2);
            } else {
                fail(s.line, "unknown measurement '" + w + "'");
            }
        } else {
            fail(s.line, "unknown statement '" + op + "'");
        }
    }
    std::vector<QubitConfig> configs;
    for (std::size_t q = 0; q < qubits; ++q) {
        if (!inits[q]) throw Error(ErrorCode::Syntax, "qubit " + std::to_string(q) + " has no 'init' line");
        QubitRole role = inits[q]->symbolic()    ? QubitRole::Input
                         : meas[q].is_none()     ? QubitRole::Output
                                                 : QubitRole::Ancilla;
        configs.push_back({role, *inits[q], meas[q]});
    }
    return IcmCircuit(LinearCircuit::from_pairs(qubits, pairs), std::move(configs));
}

namespace {

struct GateName {
    LogicalGate gate;
    std::string_view name;
};

constexpr GateName kGateNames[] = {
    {LogicalGate::Cnot, "cnot"}, {LogicalGate::T, "t"},   {LogicalGate::Tdg, "tdg"}, {LogicalGate::P, "p"},
    {LogicalGate::Pdg, "pdg"},   {LogicalGate::V, "v"},   {LogicalGate::H, "h"},
};

}  // namespace

Program parse_program(std::string_view text) {
    auto [qubits, st] = preamble(text, "program");
    Program p{qubits, {}};
    for (const Statement &s : st) {
        std::optional<LogicalGate> gate;
        for (const GateName &g : kGateNames) {
            if (s.words[0] == g.name) gate = g.gate;
        }
        if (!gate) throw Error(ErrorCode::UnknownGate, "line " + std::to_string(s.line) + ": unknown gate '" + s.words[0] + "'");
        LogicalOp op{*gate, 0, 0};
        if (*gate == LogicalGate::Cnot) {
            arity(s, 2);
            op.qubit = number(s, 1);
            op.target = number(s, 2);
        } else {
            arity(s, 1);
            op.qubit = number(s, 1);
        }
        if (op.qubit >= qubits || op.target >= qubits) {
            throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(s.line) + ": qubit out of range");
        }
        p.ops.push_back(op);
    }
    return p;
}

std::string format_circuit(const CircularCircuit &c) {
    std::ostringstream out;
    out << "circular\nwires " << c.wire_count() << '\n';
    for (std::size_t i = 0; i < c.gate_count(); ++i) {
        const CnotGate &g = c.gate(i);
        out << "cnot " << g.control.index << ' ' << g.target.index;
        if (g.position != i || g.id != i) out << " pos " << g.position << " id " << g.id;
        out << '\n';
    }
    return out.str();
}

std::string format_circuit(const LinearCircuit &l) {
    std::ostringstream out;
    out << "linear\nqubits " << l.qubit_count() << '\n';
    for (const auto &[c, t] : l.gate_pairs()) out << "cnot " << c << ' ' << t << '\n';
    return out.str();
}

std::string_view basis_name(Basis b) {
    switch (b) {
    case Basis::X: return "x";
    case Basis::Y: return "y";
    case Basis::Z: return "z";
    case Basis::A: return "a";
    }
    return "?";
}

std::string format_init(const InitBasis &init) {
    switch (init.kind) {
    case InitBasis::Kind::Zero: return "zero";
    case InitBasis::Kind::Plus: return "plus";
    case InitBasis::Kind::Y: return "y";
    case InitBasis::Kind::A: return "a";
    case InitBasis::Kind::Symbolic: return "in:" + init.name;
    }
    return "?";
}

std::string format_meas(const MeasBasis &meas) {
    if (meas.is_none()) return "none";
    if (meas.is_configurable()) {
        return "cfg:" + std::string(basis_name(meas.options[0])) + "/" + std::string(basis_name(meas.options[1]));
    }
    return std::string(basis_name(meas.options[0]));
}

std::string format_icm(const IcmCircuit &icm) {
    std::ostringstream out;
    out << "icm\nqubits " << icm.qubit_count() << '\n';
    for (const auto &[c, t] : icm.circuit().gate_pairs()) out << "cnot " << c << ' ' << t << '\n';
    for (std::size_t q = 0; q < icm.qubit_count(); ++q) {
        out << "init " << q << ' ' << format_init(icm.config(q).init) << '\n';
    }
    for (std::size_t q = 0; q < icm.qubit_count(); ++q) {
        out << "measure " << q << ' ' << format_meas(icm.config(q).meas) << '\n';
    }
    return out.str();
}

std::string format_program(const Program &p) {
    std::ostringstream out;
    out << "program\nqubits " << p.qubits << '\n';
    for (const LogicalOp &op : p.ops) {
        for (const GateName &g : kGateNames) {
            if (g.gate == op.gate) out << g.name;
        }
        out << ' ' << op.qubit;
        if (op.gate == LogicalGate::Cnot) out << ' ' << op.target;
        out << '\n';
    }
    return out.str();
}

CutFile parse_cuts(std::string_view text) {
    CutFile out;
    std::vector<Gap> gaps;
    bool direction_seen = false;
    for (const Statement &s : tokenize(text)) {
        if (s.words[0] == "cut") {
            arity(s, 2);
            gaps.push_back({WireId{number(s, 1)}, number(s, 2)});
        } else if (s.words[0] == "direction") {
            arity(s, 1);
            if (direction_seen) fail(s.line, "direction given twice");
            direction_seen = true;
            if (s.words[1] == "cw") {
                out.direction = Direction::Clockwise;
            } else if (s.words[1] == "ccw") {
                out.direction = Direction::CounterClockwise;
            } else {
                fail(s.line, "direction must be cw or ccw");
            }
        } else {
            fail(s.line, "unknown statement '" + s.words[0] + "'");
        }
    }
    out.cuts = CutSet::from_gaps(std::move(gaps));
    return out;
}

std::string format_cuts(const CutSet &cuts, Direction d) {
    std::ostringstream out;
    for (const Gap &g : cuts.gaps()) out << "cut " << g.wire.index << ' ' << g.index << '\n';
    out << "direction " << (d == Direction::Clockwise ? "cw" : "ccw") << '\n';
    return out.str();
}

FaultSpec parse_fault(std::string_view text) {
    std::optional<FaultSpec> out;
    for (const Statement &s : tokenize(text)) {
        if (s.words[0] != "smgf") fail(s.line, "unknown fault '" + s.words[0] + "'");
        arity(s, 1);
        if (out) fail(s.line, "only one fault is supported");
        out = FaultSpec{number(s, 1)};
    }
    if (!out) fail(1, "no fault given");
    return *out;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Syntax, "cannot read " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace ccnot
