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

#include "ccnot/stabiliser_map.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ccnot/error.hpp"
#include "ccnot/gf2.hpp"

namespace ccnot {

namespace {

std::vector<std::size_t> normalised(std::vector<std::size_t> image) {
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

std::vector<std::vector<std::size_t>> invert_part(const std::vector<std::vector<std::size_t>> &rows) {
    const std::size_t n = rows.size();
    std::vector<gf2::BitRow> aug;
    aug.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        gf2::BitRow r(2 * n);
        for (std::size_t o : rows[q]) {
            r.set(o, true);
        }
        r.set(n + q, true);
        aug.push_back(std::move(r));
    }
    gf2::Echelon e = gf2::reduce(std::move(aug), n);
    if (e.pivots.size() != n) {
        throw Error(ErrorCode::ShapeMismatch, "stabiliser map is not invertible");
    }
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            if (e.rows[k].get(n + j)) {
                out[e.pivots[k]].push_back(j);
            }
        }
    }
    return out;
}

void write_part(std::ostringstream &out, char kind, const std::vector<std::vector<std::size_t>> &part) {
    for (std::size_t q = 0; q < part.size(); ++q) {
        out << kind << q << " -> " << kind << '{';
        for (std::size_t k = 0; k < part[q].size(); ++k) {
            out << (k ? "," : "") << part[q][k];
        }
        out << "}\n";
    }
}

[[noreturn]] void syntax(std::size_t line, const std::string &msg) {
    throw Error(ErrorCode::Syntax, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

void StabiliserMap::set_x_image(std::size_t q, std::vector<std::size_t> image) {
    x_.at(q) = normalised(std::move(image));
}

void StabiliserMap::set_z_image(std::size_t q, std::vector<std::size_t> image) {
    z_.at(q) = normalised(std::move(image));
}

StabiliserMap StabiliserMap::inverse() const {
    StabiliserMap out(qubit_count());
    out.x_ = invert_part(x_);
    out.z_ = invert_part(z_);
    return out;
}

std::string StabiliserMap::to_report() const {
    std::ostringstream out;
    write_part(out, 'X', x_);
    write_part(out, 'Z', z_);
    return out.str();
}

StabiliserMap StabiliserMap::parse_report(std::string_view text) {
    struct Entry {
        char kind;
        std::size_t qubit;
        std::vector<std::size_t> image;
    };
    std::vector<Entry> entries;
    std::size_t qubits = 0;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::string compact;
        for (char ch : line) {
            if (!std::isspace(static_cast<unsigned char>(ch))) {
                compact.push_back(ch);
            }
        }
        if (compact.empty()) {
            continue;
        }
        // Shape: K<q>->K{a,b,...}
        const char kind = compact[0];
        if (kind != 'X' && kind != 'Z') {
            syntax(line_no, "expected X or Z");
        }
        std::size_t arrow = compact.find("->");
        if (arrow == std::string::npos || arrow < 2) {
            syntax(line_no, "expected '<K><q> -> <K>{...}'");
        }
        Entry e{kind, 0, {}};
        try {
            std::size_t used = 0;
            e.qubit = std::stoul(compact.substr(1, arrow - 1), &used);
            if (used != arrow - 1) {
                syntax(line_no, "bad qubit index");
            }
        } catch (const std::logic_error &) {
            syntax(line_no, "bad qubit index");
        }
        std::string rhs = compact.substr(arrow + 2);
        if (rhs.size() < 3 || rhs[0] != kind || rhs[1] != '{' || rhs.back() != '}') {
            syntax(line_no, "image must look like " + std::string(1, kind) + "{...}");
        }
        std::string body = rhs.substr(2, rhs.size() - 3);
        std::istringstream items(body);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                std::size_t used = 0;
                std::size_t v = std::stoul(item, &used);
                if (used != item.size()) {
                    syntax(line_no, "bad image entry '" + item + "'");
                }
                e.image.push_back(v);
                qubits = std::max(qubits, v + 1);
            } catch (const std::logic_error &) {
                syntax(line_no, "bad image entry '" + item + "'");
            }
        }
        qubits = std::max(qubits, e.qubit + 1);
        entries.push_back(std::move(e));
    }
    StabiliserMap out(qubits);
    std::vector<bool> seen_x(qubits, false);
    std::vector<bool> seen_z(qubits, false);
    for (auto &e : entries) {
        auto &seen = e.kind == 'X' ? seen_x : seen_z;
        if (seen[e.qubit]) {
            throw Error(ErrorCode::Syntax, std::string("duplicate entry for ") + e.kind + std::to_string(e.qubit));
        }
        seen[e.qubit] = true;
        if (e.kind == 'X') {
            out.set_x_image(e.qubit, std::move(e.image));
        } else {
            out.set_z_image(e.qubit, std::move(e.image));
        }
    }
    for (std::size_t q = 0; q < qubits; ++q) {
        if (!seen_x[q] || !seen_z[q]) {
            throw Error(ErrorCode::Syntax, "map is missing an entry for qubit " + std::to_string(q));
        }
    }
    return out;
}

StabiliserMap StabiliserMap::single_cnot(std::size_t qubits, std::size_t control, std::size_t target) {
    StabiliserMap m = identity(qubits);
    m.set_x_image(control, {control, target});
    m.set_z_image(target, {control, target});
    return m;
}

StabiliserMap StabiliserMap::identity(std::size_t qubits) {
    StabiliserMap m(qubits);
    for (std::size_t q = 0; q < qubits; ++q) {
        m.x_[q] = {q};
        m.z_[q] = {q};
    }
    return m;
}

}  // namespace ccnot
