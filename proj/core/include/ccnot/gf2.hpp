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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ccnot::gf2 {

/// Fixed-width bit vector over GF(2), packed into 64-bit words.
class BitRow {
  public:
    BitRow() = default;
    explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    bool get(std::size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1u; }
    void set(std::size_t k, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (k & 63);
        if (v) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(std::size_t k) { words_[k >> 6] ^= std::uint64_t{1} << (k & 63); }

    BitRow &operator^=(const BitRow &other) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }

    bool none() const noexcept {
        for (auto w : words_) {
            if (w) {
                return false;
            }
        }
        return true;
    }

    /// Any bit set among [0, limit).
    bool any_below(std::size_t limit) const {
        std::size_t full = limit >> 6;
        for (std::size_t w = 0; w < full; ++w) {
            if (words_[w]) {
                return true;
            }
        }
        if (limit & 63) {
            return (words_[full] & ((std::uint64_t{1} << (limit & 63)) - 1)) != 0;
        }
        return false;
    }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) {
            n += static_cast<std::size_t>(std::popcount(w));
        }
        return n;
    }

    bool operator==(const BitRow &) const = default;
    auto operator<=>(const BitRow &) const = default;

  private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Reduced row echelon form of a set of rows, eliminating over columns
/// [0, pivot_limit). Pivots are chosen in increasing column order, so the
/// result is deterministic.
struct Echelon {
    std::vector<BitRow> rows;          ///< non-zero reduced rows, one per pivot
    std::vector<std::size_t> pivots;   ///< pivot column of each row
    std::vector<BitRow> leftovers;     ///< rows with no bit below pivot_limit
};

Echelon reduce(std::vector<BitRow> rows, std::size_t pivot_limit);

}  // namespace ccnot::gf2
