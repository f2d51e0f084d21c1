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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ccnot/boolean_model.hpp"
#include "ccnot/circuit.hpp"
#include "ccnot/icm.hpp"
#include "ccnot/pauli_oracle.hpp"

using namespace ccnot;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> random_pairs(std::size_t qubits, std::size_t gates, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, qubits - 1);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < gates; ++i) {
        std::size_t a = i + 1 < qubits ? i : pick(rng), b = i + 1 < qubits ? i + 1 : pick(rng);
        while (b == a) b = pick(rng);
        out.emplace_back(a, b);
    }
    return out;
}

CutSet radial(const CircularCircuit &c, std::size_t after) {
    std::vector<Gap> g;
    for (std::size_t w = 0; w < c.wire_count(); ++w) g.push_back(c.gap_at(WireId{w}, RadialAngle{after}));
    return CutSet::from_gaps(g);
}

void BM_Circularize(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    LinearCircuit l = LinearCircuit::from_pairs(n, random_pairs(n, 4 * n, 11));
    for (auto _ : state) benchmark::DoNotOptimize(circularize(l));
}
BENCHMARK(BM_Circularize)->RangeMultiplier(4)->Range(4, 256);

void BM_Derive(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    CircularCircuit c = circularize(LinearCircuit::from_pairs(n, random_pairs(n, 4 * n, 5))).first;
    CutSet s = radial(c, c.gate_count() - 1);
    for (auto _ : state) benchmark::DoNotOptimize(derive_transformations(c, s, Direction::Clockwise));
}
BENCHMARK(BM_Derive)->RangeMultiplier(2)->Range(4, 64);

void BM_Oracle(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    LinearCircuit l = LinearCircuit::from_pairs(n, random_pairs(n, 4 * n, 5));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_map(l));
}
BENCHMARK(BM_Oracle)->RangeMultiplier(2)->Range(4, 64);

void BM_SearchSwap(benchmark::State &state) {
    CircularCircuit c = CircularCircuit::from_pairs(2, {{0, 1}, {1, 0}, {0, 1}});
    StabiliserMap target = StabiliserMap::single_cnot(2, 1, 0);
    auto budget = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search_cuts(c, target, budget));
}
BENCHMARK(BM_SearchSwap)->DenseRange(2, 6, 2);

void BM_ToffoliPipeline(benchmark::State &state) {
    Program p{3, {{LogicalGate::H, 2}, {LogicalGate::Cnot, 1, 2}, {LogicalGate::Tdg, 2}, {LogicalGate::Cnot, 0, 2},
                  {LogicalGate::T, 2}, {LogicalGate::Cnot, 1, 2}, {LogicalGate::Tdg, 2}, {LogicalGate::Cnot, 0, 2},
                  {LogicalGate::Tdg, 1}, {LogicalGate::T, 2}, {LogicalGate::Cnot, 0, 1}, {LogicalGate::H, 2},
                  {LogicalGate::Tdg, 1}, {LogicalGate::Cnot, 0, 1}, {LogicalGate::T, 0}, {LogicalGate::P, 1}}};
    for (auto _ : state) benchmark::DoNotOptimize(strip_and_circularize(translate_to_icm(p).icm));
}
BENCHMARK(BM_ToffoliPipeline);

}  // namespace

BENCHMARK_MAIN();
