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

#include "ccnot/gf2.hpp"

#include <utility>

namespace ccnot::gf2 {

Echelon reduce(std::vector<BitRow> rows, std::size_t pivot_limit) {
    Echelon out;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < pivot_limit && rank < rows.size(); ++col) {
        std::size_t pick = rank;
        while (pick < rows.size() && !rows[pick].get(col)) {
            ++pick;
        }
        if (pick == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pick]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        out.pivots.push_back(col);
        ++rank;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r < rank) {
            out.rows.push_back(std::move(rows[r]));
        } else if (!rows[r].none()) {
            out.leftovers.push_back(std::move(rows[r]));
        }
    }
    return out;
}

}  // namespace ccnot::gf2
