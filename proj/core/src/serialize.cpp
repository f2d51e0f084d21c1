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

#include "ccnot/serialize.hpp"

#include <json.hpp>

#include "ccnot/error.hpp"

namespace ccnot {

using nlohmann::json;

namespace {

json parse(std::string_view text, std::string_view type) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::Syntax, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("type", "") != type) {
        throw Error(ErrorCode::Syntax, "expected a JSON object of type '" + std::string(type) + "'");
    }
    return j;
}

// Wrap nlohmann type errors so callers only see ccnot::Error.
template <typename F>
auto guarded(F &&f) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw Error(ErrorCode::Syntax, std::string("malformed JSON document: ") + e.what());
    }
}

json pairs(const std::vector<std::pair<std::size_t, std::size_t>> &ps) {
    json a = json::array();
    for (const auto &[c, t] : ps) a.push_back({c, t});
    return a;
}

}  // namespace

std::string to_json(const CircularCircuit &c) {
    json gates = json::array();
    for (const CnotGate &g : c.gates()) {
        gates.push_back({{"id", g.id}, {"control", g.control.index}, {"target", g.target.index}, {"position", g.position}});
    }
    return json{{"type", "circular"}, {"wires", c.wire_count()}, {"gates", gates}}.dump(2);
}

std::string to_json(const LinearCircuit &l) {
    return json{{"type", "linear"}, {"qubits", l.qubit_count()}, {"gates", pairs(l.gate_pairs())}}.dump(2);
}

std::string to_json(const CutSet &cuts, Direction d) {
    json gaps = json::array();
    for (const Gap &g : cuts.gaps()) gaps.push_back({g.wire.index, g.index});
    return json{{"type", "cuts"}, {"direction", d == Direction::Clockwise ? "cw" : "ccw"}, {"cuts", gaps}}.dump(2);
}

std::string to_json(const StabiliserMap &m) {
    json x = json::array(), z = json::array();
    for (std::size_t q = 0; q < m.qubit_count(); ++q) {
        x.push_back(m.x_image(q));
        z.push_back(m.z_image(q));
    }
    return json{{"type", "map"}, {"qubits", m.qubit_count()}, {"x", x}, {"z", z}}.dump(2);
}

std::string to_json(const IcmCircuit &icm) {
    json qubits = json::array();
    for (const QubitConfig &cfg : icm.configs()) {
        const char *role = cfg.role == QubitRole::Input ? "input" : cfg.role == QubitRole::Output ? "output" : "ancilla";
        qubits.push_back({{"role", role}, {"init", format_init(cfg.init)}, {"measure", format_meas(cfg.meas)}});
    }
    return json{{"type", "icm"}, {"gates", pairs(icm.circuit().gate_pairs())}, {"qubits", qubits}}.dump(2);
}

std::string to_json(const JoinRecord &r) {
    auto joins = [](const std::vector<JoinRecord::Join> &js) {
        json a = json::array();
        for (const auto &j : js) a.push_back({{"consumer", j.consumer}, {"producer", j.producer}});
        return a;
    };
    return json{{"type", "joins"},
                {"joins", joins(r.joins)},
                {"loops", joins(r.loops)},
                {"wire_of_qubit", r.wire_of_qubit}}
        .dump(2);
}

CircularCircuit circular_from_json(std::string_view text) {
    json j = parse(text, "circular");
    return guarded([&] {
        std::vector<CnotGate> gates;
        for (const json &g : j.at("gates")) {
            gates.push_back({g.at("id").get<std::size_t>(), WireId{g.at("control").get<std::size_t>()},
                             WireId{g.at("target").get<std::size_t>()}, g.at("position").get<std::size_t>()});
        }
        return CircularCircuit(j.at("wires").get<std::size_t>(), std::move(gates));
    });
}

LinearCircuit linear_from_json(std::string_view text) {
    json j = parse(text, "linear");
    return guarded([&] {
        return LinearCircuit::from_pairs(j.at("qubits").get<std::size_t>(),
                                         j.at("gates").get<std::vector<std::pair<std::size_t, std::size_t>>>());
    });
}

CutFile cuts_from_json(std::string_view text) {
    json j = parse(text, "cuts");
    return guarded([&] {
        CutFile out;
        std::string d = j.value("direction", "cw");
        if (d != "cw" && d != "ccw") throw Error(ErrorCode::Syntax, "direction must be cw or ccw");
        out.direction = d == "cw" ? Direction::Clockwise : Direction::CounterClockwise;
        std::vector<Gap> gaps;
        for (const auto &[w, k] : j.at("cuts").get<std::vector<std::pair<std::size_t, std::size_t>>>()) {
            gaps.push_back({WireId{w}, k});
        }
        out.cuts = CutSet::from_gaps(std::move(gaps));
        return out;
    });
}

StabiliserMap map_from_json(std::string_view text) {
    json j = parse(text, "map");
    return guarded([&] {
        std::size_t n = j.at("qubits").get<std::size_t>();
        auto x = j.at("x").get<std::vector<std::vector<std::size_t>>>();
        auto z = j.at("z").get<std::vector<std::vector<std::size_t>>>();
        if (x.size() != n || z.size() != n) throw Error(ErrorCode::SizeMismatch, "image count differs from qubits");
        StabiliserMap m(n);
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t i : x[q]) {
                if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "image qubit out of range");
            }
            for (std::size_t i : z[q]) {
                if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "image qubit out of range");
            }
            m.set_x_image(q, x[q]);
            m.set_z_image(q, z[q]);
        }
        return m;
    });
}

}  // namespace ccnot
