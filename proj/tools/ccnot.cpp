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

// ccnot command-line front end.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccnot/boolean_model.hpp"
#include "ccnot/circuit.hpp"
#include "ccnot/circuit_io.hpp"
#include "ccnot/dot_export.hpp"
#include "ccnot/error.hpp"
#include "ccnot/icm.hpp"
#include "ccnot/pauli_oracle.hpp"
#include "ccnot/serialize.hpp"

namespace {

using namespace ccnot;
using nlohmann::ordered_json;

enum class Format { Text, Kv };

struct Options {
    Format format = Format::Text;
    std::string input;
    std::string cuts;
    std::string dir = "cw";
    std::optional<std::size_t> angle;
    std::string target;
    std::size_t max_cuts = 4;
    std::string kind = "x";
    std::optional<int> selector;
    bool parity = false;
    bool combined = false;
    bool enumerate = false;
    std::string validate;
    std::string gadget_name;
    std::string fault;
    std::uint64_t seed = 1;
    std::size_t trials = 200;
};

bool looks_like_json(const std::string &text) {
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] == '{';
}

Direction parse_dir(const std::string &s) { return s == "ccw" ? Direction::CounterClockwise : Direction::Clockwise; }
const char *dir_name(Direction d) { return d == Direction::Clockwise ? "cw" : "ccw"; }

CircularCircuit load_circular(const std::string &path) {
    std::string text = read_text_file(path);
    if (looks_like_json(text)) return circular_from_json(text);
    if (detect_format(text) != CircuitFormat::Circular) throw Error(ErrorCode::Syntax, path + ": expected a circular circuit");
    return parse_circular(text);
}

LinearCircuit load_linear(const std::string &path) {
    std::string text = read_text_file(path);
    if (looks_like_json(text)) return linear_from_json(text);
    if (detect_format(text) != CircuitFormat::Linear) throw Error(ErrorCode::Syntax, path + ": expected a linear circuit");
    return parse_linear(text);
}

CutFile load_cuts(const std::string &path) {
    std::string text = read_text_file(path);
    return looks_like_json(text) ? cuts_from_json(text) : parse_cuts(text);
}

StabiliserMap load_map(const std::string &path) {
    std::string text = read_text_file(path);
    return looks_like_json(text) ? map_from_json(text) : StabiliserMap::parse_report(text);
}

// Cut file direction unless --dir was given explicitly.
Direction direction_for(const Options &o, const CutFile &cf, bool dir_given) {
    return dir_given ? parse_dir(o.dir) : cf.direction;
}

std::string cut_list(const CutSet &s) {
    std::string out;
    for (const Gap &g : s.gaps()) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(g.wire.index) + "," + std::to_string(g.index) + ")";
    }
    return out;
}

ordered_json gaps_json(std::span<const Gap> gaps) {
    ordered_json a = ordered_json::array();
    for (const Gap &g : gaps) a.push_back({g.wire.index, g.index});
    return a;
}

std::string joins_text(const JoinRecord &r) {
    std::ostringstream s;
    for (const auto &j : r.joins) s << "join " << j.producer << " -> " << j.consumer << "\n";
    for (const auto &j : r.loops) s << "loop " << j.producer << " -> " << j.consumer << "\n";
    s << "wire_of_qubit";
    for (std::size_t w : r.wire_of_qubit) s << ' ' << w;
    s << "\n";
    return s.str();
}

void emit_json(const std::string &doc) { std::cout << ordered_json::parse(doc).dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_parse(const Options &o) {
    std::string text = read_text_file(o.input);
    switch (detect_format(text)) {
    case CircuitFormat::Circular: {
        CircularCircuit c = parse_circular(text);
        o.format == Format::Kv ? emit_json(to_json(c)) : void(std::cout << format_circuit(c));
        break;
    }
    case CircuitFormat::Linear: {
        LinearCircuit l = parse_linear(text);
        o.format == Format::Kv ? emit_json(to_json(l)) : void(std::cout << format_circuit(l));
        break;
    }
    case CircuitFormat::Icm: {
        IcmCircuit icm = parse_icm(text);
        o.format == Format::Kv ? emit_json(to_json(icm)) : void(std::cout << format_icm(icm));
        break;
    }
    case CircuitFormat::Program:
        std::cout << format_program(parse_program(text));
        break;
    }
    return 0;
}

int cmd_cuts(const Options &o) {
    CircularCircuit c = load_circular(o.input);
    if (o.enumerate) {
        auto points = enumerate_cut_points(c);
        if (o.format == Format::Kv) {
            ordered_json a = ordered_json::array();
            for (const CutPoint &p : points) a.push_back({p.gap.wire.index, p.gap.index});
            std::cout << ordered_json{{"type", "cut_points"}, {"points", a}}.dump(2) << "\n";
        } else {
            for (const CutPoint &p : points) std::cout << "cut " << p.gap.wire.index << " " << p.gap.index << "\n";
        }
        return 0;
    }
    CutSet s = load_cuts(o.validate).cuts;
    RadialAngle first = validate_cut_set(c, s);
    auto angles = radial_angles(c, s);
    if (o.format == Format::Kv) {
        ordered_json a = ordered_json::array();
        for (RadialAngle r : angles) a.push_back(r.after);
        std::cout << ordered_json{{"type", "validation"}, {"valid", true}, {"first_angle", first.after}, {"angles", a}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "valid: radial after gate";
        for (RadialAngle r : angles) std::cout << ' ' << r.after;
        std::cout << "\n";
    }
    return 0;
}

int cmd_linearize(const Options &o, bool dir_given) {
    CircularCircuit c = load_circular(o.input);
    CutFile cf = load_cuts(o.cuts);
    Direction d = direction_for(o, cf, dir_given);
    LinearCircuit l = o.angle ? linearize(c, cf.cuts, d, RadialAngle{*o.angle}) : linearize(c, cf.cuts, d);
    o.format == Format::Kv ? emit_json(to_json(l)) : void(std::cout << format_circuit(l));
    return 0;
}

int cmd_circularize(const Options &o) {
    auto [c, rec] = circularize(load_linear(o.input));
    if (o.format == Format::Kv) {
        std::cout << ordered_json{{"type", "circularization"},
                                  {"circuit", ordered_json::parse(to_json(c))},
                                  {"joins", ordered_json::parse(to_json(rec))}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << format_circuit(c) << joins_text(rec);
    }
    return 0;
}

int cmd_model(const Options &o) {
    CircularCircuit c = load_circular(o.input);
    BooleanModel m = o.kind == "combined" ? build_combined_model(c)
                                          : build_model(c, o.kind == "z" ? ModelKind::Z : ModelKind::X);
    if (o.selector) m = pin_selector(m, *o.selector != 0);
    if (!o.cuts.empty()) m = apply_cuts(m, load_cuts(o.cuts).cuts);
    if (o.parity) {
        ParitySystem s = to_parity_system(m);
        std::cout << s.dump();
        std::cout << "rank " << s.rank() << " of " << s.variable_count() << " variables\n";
        return 0;
    }
    if (o.format == Format::Kv) {
        ordered_json vars = ordered_json::array(), clauses = ordered_json::array();
        for (std::size_t v = 0; v < m.variables().size(); ++v) vars.push_back(m.variable_name(v));
        for (const Clause &cl : m.clauses()) {
            ordered_json names = ordered_json::array();
            for (std::size_t v : cl.vars) names.push_back(m.variable_name(v));
            const char *k = cl.kind == ClauseKind::Join ? "J" : cl.kind == ClauseKind::Cnot ? "C" : "CC";
            clauses.push_back({{"kind", k}, {"vars", names}});
        }
        std::cout << ordered_json{{"type", "model"}, {"variables", vars}, {"clauses", clauses}}.dump(2) << "\n";
    } else {
        std::cout << dump_model(m);
    }
    return 0;
}

void emit_map(const Options &o, const StabiliserMap &m) {
    o.format == Format::Kv ? emit_json(to_json(m)) : void(std::cout << m.to_report());
}

int cmd_derive(const Options &o, bool dir_given) {
    CircularCircuit c = load_circular(o.input);
    CutFile cf = load_cuts(o.cuts);
    Direction d = direction_for(o, cf, dir_given);
    emit_map(o, o.combined ? derive_transformations_combined(c, cf.cuts, d) : derive_transformations(c, cf.cuts, d));
    return 0;
}

int cmd_search(const Options &o) {
    CircularCircuit c = load_circular(o.input);
    auto hits = search_cuts(c, load_map(o.target), o.max_cuts);
    if (o.format == Format::Kv) {
        ordered_json a = ordered_json::array();
        for (const SearchHit &h : hits) a.push_back({{"cuts", gaps_json(h.cuts.gaps())}, {"direction", dir_name(h.direction)}});
        std::cout << ordered_json{{"type", "search"}, {"hits", a}}.dump(2) << "\n";
    } else {
        for (const SearchHit &h : hits) std::cout << dir_name(h.direction) << " " << cut_list(h.cuts) << "\n";
        std::cout << hits.size() << " match(es)\n";
    }
    return 0;
}

const std::map<std::string, GadgetKind> kGadgets{
    {"teleport", GadgetKind::Teleport}, {"t", GadgetKind::T},         {"p", GadgetKind::P},
    {"v", GadgetKind::V},               {"bell", GadgetKind::Bell},   {"measure-z", GadgetKind::MeasureZ},
    {"remote-cnot", GadgetKind::RemoteCnot}, {"sdt", GadgetKind::Sdt},
};

void emit_icm(const Options &o, const IcmCircuit &icm) {
    o.format == Format::Kv ? emit_json(to_json(icm)) : void(std::cout << format_icm(icm));
}

IcmCircuit load_icm_like(const std::string &path) {
    std::string text = read_text_file(path);
    switch (detect_format(text)) {
    case CircuitFormat::Icm:
        return parse_icm(text);
    case CircuitFormat::Program:
        return translate_to_icm(parse_program(text)).icm;
    default:
        throw Error(ErrorCode::Syntax, path + ": expected an icm circuit or a program");
    }
}

int cmd_icm_gadget(const Options &o) {
    emit_icm(o, gadget(kGadgets.at(o.gadget_name)));
    return 0;
}

int cmd_icm_translate(const Options &o) {
    Translation t = translate_to_icm(parse_program(read_text_file(o.input)));
    if (o.format == Format::Kv) {
        std::cout << ordered_json{{"type", "translation"},
                                  {"gadgets", t.gadgets},
                                  {"carrier", t.carrier},
                                  {"icm", ordered_json::parse(to_json(t.icm))}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << format_icm(t.icm);
        std::cout << "# gadgets " << t.gadgets << ", qubits " << t.icm.qubit_count() << ", cnots "
                  << t.icm.circuit().gate_count() << "\n";
    }
    return 0;
}

int cmd_icm_strip(const Options &o) {
    IcmCircuit icm = load_icm_like(o.input);
    auto [c, rec] = strip_and_circularize(icm);
    if (o.format == Format::Kv) {
        std::cout << ordered_json{{"type", "strip"},
                                  {"icm_qubits", icm.qubit_count()},
                                  {"cross_joins", rec.joins.size()},
                                  {"wires", c.wire_count()},
                                  {"circuit", ordered_json::parse(to_json(c))},
                                  {"joins", ordered_json::parse(to_json(rec))}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << format_circuit(c) << joins_text(rec);
        std::cout << "# icm qubits " << icm.qubit_count() << ", cross-joins " << rec.joins.size() << ", wires "
                  << c.wire_count() << "\n";
    }
    return 0;
}

int cmd_fault(const Options &o, bool dir_given) {
    CircularCircuit c = load_circular(o.input);
    CutFile cf = load_cuts(o.cuts);
    Direction d = direction_for(o, cf, dir_given);
    FaultSpec f = parse_fault(read_text_file(o.fault));
    FaultInjection inj = inject_smgf(c, cf.cuts, f);
    StabiliserMap m = derive_with_fault(c, cf.cuts, d, f);
    if (o.format == Format::Kv) {
        std::cout << ordered_json{{"type", "fault"},
                                  {"gate", f.gate},
                                  {"cuts", gaps_json(inj.cuts.gaps())},
                                  {"added", gaps_json(inj.added)},
                                  {"ancilla_start", {inj.ancilla_start.wire.index, inj.ancilla_start.index}},
                                  {"map", ordered_json::parse(to_json(m))}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "smgf gate " << f.gate << "\n";
        std::cout << "cuts " << cut_list(inj.cuts) << "\n";
        std::cout << "added " << cut_list(CutSet::from_gaps(inj.added)) << "\n";
        std::cout << "ancilla after (" << inj.ancilla_start.wire.index << "," << inj.ancilla_start.index << ") "
                  << format_init(inj.patch.init) << "\n";
        std::cout << m.to_report();
    }
    return 0;
}

int cmd_export(const Options &o) {
    std::string text = read_text_file(o.input);
    if (detect_format(text) == CircuitFormat::Linear) {
        std::cout << to_dot(parse_linear(text));
    } else {
        CutSet cuts = o.cuts.empty() ? CutSet{} : load_cuts(o.cuts).cuts;
        std::cout << to_dot(load_circular(o.input), cuts);
    }
    return 0;
}

// Randomized self-check: round trips, derived maps vs the oracle, and faults.
int cmd_check(const Options &o) {
    std::mt19937_64 rng(o.seed);
    std::size_t round_trips = 0, derivations = 0, faults = 0, failures = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
        std::size_t g = std::uniform_int_distribution<std::size_t>(n - 1, 8)(rng);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t i = 0; i < g; ++i) {
            // Chain the first n-1 gates so every qubit is touched.
            std::size_t a = i + 1 < n ? i : pick(rng), b = i + 1 < n ? i + 1 : pick(rng);
            while (b == a) b = pick(rng);
            if (rng() & 1U) std::swap(a, b);
            pairs.emplace_back(a, b);
        }
        LinearCircuit l = LinearCircuit::from_pairs(n, pairs);
        auto [c, rec] = circularize(l);
        std::vector<std::pair<std::size_t, std::size_t>> mapped;
        for (auto [a, b] : pairs) mapped.emplace_back(rec.wire_of_qubit[a], rec.wire_of_qubit[b]);
        std::vector<Gap> start;
        for (std::size_t w = 0; w < c.wire_count(); ++w) start.push_back(c.gap_at(WireId{w}, RadialAngle{c.gate_count() - 1}));
        CutSet base = CutSet::from_gaps(start);
        ++round_trips;
        if (linearize(c, base, Direction::Clockwise, RadialAngle{c.gate_count() - 1}).gate_pairs() != mapped) {
            ++failures;
            std::cout << "round trip failed: trial " << t << "\n";
        }
        // Random extra cuts on top of the radial base.
        CutSet s = base;
        for (std::size_t w = 0; w < c.wire_count(); ++w)
            for (std::size_t k = 0; k < c.gap_count(WireId{w}); ++k)
                if (rng() % 4 == 0) s = s.with({WireId{w}, k});
        for (Direction d : {Direction::Clockwise, Direction::CounterClockwise}) {
            ++derivations;
            if (!equivalent_up_to_sign(derive_transformations(c, s, d), oracle_map(linearize(c, s, d)))) {
                ++failures;
                std::cout << "derivation mismatch: trial " << t << " " << dir_name(d) << "\n";
            }
        }
        const CnotGate &victim = c.gate(rng() % c.gate_count());
        LinearCircuit lb = linearize(c, base, Direction::Clockwise);
        ++faults;
        if (derive_with_fault(c, base, Direction::Clockwise, {victim.id}) != oracle_map(lb.without_gate(victim.id))) {
            ++failures;
            std::cout << "fault mismatch: trial " << t << " gate " << victim.id << "\n";
        }
    }
    if (o.format == Format::Kv) {
        std::cout << ordered_json{{"type", "check"},       {"seed", o.seed},           {"round_trips", round_trips},
                                  {"derivations", derivations}, {"faults", faults}, {"failures", failures}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "seed " << o.seed << ": " << round_trips << " round trips, " << derivations << " derivations, "
                  << faults << " faults, " << failures << " failure(s)\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Circular CNOT circuits: cuts, Boolean models, ICM construction"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    std::map<std::string, Format> formats{{"text", Format::Text}, {"kv", Format::Kv}};
    app.add_option("--format", o.format, "output format")->transform(CLI::CheckedTransformer(formats));

    auto input = [&](CLI::App *sub) { sub->add_option("file", o.input, "input file")->required()->check(CLI::ExistingFile); };
    auto cut_opt = [&](CLI::App *sub, bool required) {
        auto *opt = sub->add_option("--cuts", o.cuts, "cut file")->check(CLI::ExistingFile);
        if (required) opt->required();
    };
    CLI::Option *dir_opt = nullptr;
    std::vector<CLI::Option *> dir_opts;
    auto dir = [&](CLI::App *sub) {
        dir_opt = sub->add_option("--dir", o.dir, "traversal direction (defaults to the cut file's)")
                      ->check(CLI::IsMember({"cw", "ccw"}));
        dir_opts.push_back(dir_opt);
    };

    auto *parse = app.add_subcommand("parse", "parse and normalise a circuit, icm or program file");
    input(parse);

    auto *cuts = app.add_subcommand("cuts", "enumerate cut points or validate a cut set");
    input(cuts);
    auto *en = cuts->add_flag("--enumerate", o.enumerate, "list every cut point");
    auto *va = cuts->add_option("--validate", o.validate, "cut file to validate")->check(CLI::ExistingFile);
    en->excludes(va);

    auto *lin = app.add_subcommand("linearize", "cut a circular circuit into a linear one");
    input(lin);
    cut_opt(lin, true);
    dir(lin);
    lin->add_option("--angle", o.angle, "start after this gate index");

    auto *circ = app.add_subcommand("circularize", "close a linear circuit into circular wires");
    input(circ);

    auto *model = app.add_subcommand("model", "build the Boolean model of a circular circuit");
    input(model);
    cut_opt(model, false);
    model->add_option("--kind", o.kind, "x, z or combined")->check(CLI::IsMember({"x", "z", "combined"}));
    model->add_option("--selector", o.selector, "pin the combined model's selector")->check(CLI::IsMember({0, 1}));
    model->add_flag("--parity", o.parity, "print the parity equations instead of clauses");

    auto *derive = app.add_subcommand("derive", "derive the Pauli transformations of a cut circuit");
    input(derive);
    cut_opt(derive, true);
    dir(derive);
    derive->add_flag("--combined", o.combined, "use the combined X/Z model");

    auto *search = app.add_subcommand("search", "find cut sets realising a target transformation");
    input(search);
    search->add_option("--target", o.target, "target map file")->required()->check(CLI::ExistingFile);
    search->add_option("--max-cuts", o.max_cuts, "largest cut set to try");

    auto *icm = app.add_subcommand("icm", "ICM construction");
    icm->require_subcommand(1);
    auto *gad = icm->add_subcommand("gadget", "print a gadget template");
    std::vector<std::string> names;
    for (const auto &[k, v] : kGadgets) names.push_back(k);
    gad->add_option("name", o.gadget_name, "gadget name")->required()->check(CLI::IsMember(names));
    auto *tr = icm->add_subcommand("translate", "translate a program to ICM form");
    input(tr);
    auto *st = icm->add_subcommand("strip", "strip configurations and circularize");
    input(st);

    auto *fault = app.add_subcommand("fault", "inject a single missing gate fault and derive the result");
    input(fault);
    cut_opt(fault, true);
    dir(fault);
    fault->add_option("--fault", o.fault, "fault spec file")->required()->check(CLI::ExistingFile);

    auto *exp = app.add_subcommand("export", "emit a DOT graph");
    input(exp);
    cut_opt(exp, false);

    auto *check = app.add_subcommand("check", "randomized self-check against the Pauli oracle");
    check->add_option("--seed", o.seed, "random seed");
    check->add_option("--trials", o.trials, "number of random circuits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cuts->parsed() && !o.enumerate && o.validate.empty()) {
        std::cerr << "cuts: one of --enumerate or --validate is required\n" << cuts->help();
        return 2;
    }

    bool dir_given = std::any_of(dir_opts.begin(), dir_opts.end(), [](CLI::Option *op) { return op->count() > 0; });
    try {
        if (parse->parsed()) return cmd_parse(o);
        if (cuts->parsed()) return cmd_cuts(o);
        if (lin->parsed()) return cmd_linearize(o, dir_given);
        if (circ->parsed()) return cmd_circularize(o);
        if (model->parsed()) return cmd_model(o);
        if (derive->parsed()) return cmd_derive(o, dir_given);
        if (search->parsed()) return cmd_search(o);
        if (gad->parsed()) return cmd_icm_gadget(o);
        if (tr->parsed()) return cmd_icm_translate(o);
        if (st->parsed()) return cmd_icm_strip(o);
        if (fault->parsed()) return cmd_fault(o, dir_given);
        if (exp->parsed()) return cmd_export(o);
        if (check->parsed()) return cmd_check(o);
    } catch (const Error &e) {
        std::cerr << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    }
    return 2;
}
