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

// The two uncut SWAP models written out by hand with letter names, and the
// join removals of the four worked cut sets.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ccnot/boolean_model.hpp"

namespace ccnot::testing {

struct LetterClause {
    bool cnot = false;
    std::string crossing;         // CNOT only
    std::set<std::string> pair;   // split pair or joined pair

    auto operator<=>(const LetterClause &) const = default;
};

inline LetterClause C(std::string x, std::string a, std::string b) { return {true, std::move(x), {a, b}}; }
inline LetterClause J(std::string r, std::string t) { return {false, "", {r, t}}; }

inline const std::vector<LetterClause> kSwapX{C("A", "e", "f"), C("G", "b", "c"), C("D", "h", "i"),
                                            J("A", "D"),      J("A", "b"),      J("c", "D"),
                                            J("e", "i"),      J("f", "G"),      J("G", "h")};
inline const std::vector<LetterClause> kSwapZ{C("P", "k", "l"), C("M", "q", "r"), C("S", "n", "o"),
                                            J("k", "o"),      J("l", "M"),      J("M", "n"),
                                            J("P", "S"),      J("P", "q"),      J("r", "S")};

/// Letter of each segment of the SWAP circuit [01, 10, 01].
inline std::map<SegmentId, std::string> swap_letters(ModelKind kind) {
    auto seg = [](std::size_t w, std::size_t s, SegmentPart p) { return SegmentId{WireId{w}, s, p}; };
    using P = SegmentPart;
    if (kind == ModelKind::X) {
        return {{seg(0, 0, P::Span), "A"},  {seg(0, 1, P::Before), "b"}, {seg(0, 1, P::After), "c"},
                {seg(0, 2, P::Span), "D"},  {seg(1, 0, P::Before), "e"}, {seg(1, 0, P::After), "f"},
                {seg(1, 1, P::Span), "G"},  {seg(1, 2, P::Before), "h"}, {seg(1, 2, P::After), "i"}};
    }
    return {{seg(0, 0, P::Before), "k"}, {seg(0, 0, P::After), "l"}, {seg(0, 1, P::Span), "M"},
            {seg(0, 2, P::Before), "n"}, {seg(0, 2, P::After), "o"}, {seg(1, 0, P::Span), "P"},
            {seg(1, 1, P::Before), "q"}, {seg(1, 1, P::After), "r"}, {seg(1, 2, P::Span), "S"}};
}

inline std::vector<LetterClause> lettered(const BooleanModel &m) {
    auto names = swap_letters(m.kind());
    auto name = [&](std::size_t v) { return names.at(m.variables()[v]); };
    std::vector<LetterClause> out;
    for (const Clause &cl : m.clauses()) {
        if (cl.kind == ClauseKind::Cnot) {
            out.push_back(C(name(cl.vars[2]), name(cl.vars[0]), name(cl.vars[1])));
        } else {
            out.push_back(J(name(cl.vars[0]), name(cl.vars[1])));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<LetterClause> sorted(std::vector<LetterClause> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// Whether some bijection of variables maps the model's clauses onto
/// `reference` (roles kept: crossing vs split, CNOT vs join). Brute force over
/// all bijections.
inline bool isomorphic(const BooleanModel &m, const std::vector<LetterClause> &reference) {
    std::set<std::string> letters;
    for (const auto &cl : reference) {
        if (cl.cnot) letters.insert(cl.crossing);
        letters.insert(cl.pair.begin(), cl.pair.end());
    }
    std::vector<std::string> names(letters.begin(), letters.end());
    if (names.size() != m.variables().size() || reference.size() != m.clauses().size()) return false;
    std::vector<std::size_t> perm(names.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto want = sorted(reference);
    do {
        std::vector<LetterClause> got;
        for (const Clause &cl : m.clauses()) {
            if (cl.kind == ClauseKind::Cnot) {
                got.push_back(C(names[perm[cl.vars[2]]], names[perm[cl.vars[0]]], names[perm[cl.vars[1]]]));
            } else {
                got.push_back(J(names[perm[cl.vars[0]]], names[perm[cl.vars[1]]]));
            }
        }
        if (sorted(std::move(got)) == want) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Worked cut sets: gaps on the SWAP circuit plus the joins each removes.
struct WorkedCut {
    const char *name;
    std::vector<std::pair<std::size_t, std::size_t>> gaps;
    std::vector<LetterClause> removed_x;
    std::vector<LetterClause> removed_z;
    std::size_t qubits;
};

inline const std::vector<WorkedCut> kWorkedCuts{
    {"swap reconstruction", {{0, 2}, {1, 2}}, {J("A", "D"), J("e", "i")}, {J("k", "o"), J("P", "S")}, 2},
    {"single-cnot permutation", {{0, 1}, {1, 1}}, {J("c", "D"), J("G", "h")}, {J("M", "n"), J("r", "S")}, 2},
    {"teleported cnot",
     {{0, 0}, {0, 1}, {0, 2}, {1, 2}},
     {J("A", "D"), J("e", "i"), J("A", "b"), J("c", "D")},
     {J("k", "o"), J("P", "S"), J("l", "M"), J("M", "n")},
     4},
    {"selective destination teleportation",
     {{0, 1}, {0, 2}, {1, 0}, {1, 1}},
     {J("c", "D"), J("G", "h"), J("A", "D"), J("f", "G")},
     {J("M", "n"), J("r", "S"), J("k", "o"), J("P", "q")},
     4},
};

}  // namespace ccnot::testing
