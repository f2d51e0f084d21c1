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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ccnot {

/// Per input qubit, the output qubits carrying X (resp. Z) after propagation.
/// Phases are not represented.
class StabiliserMap {
  public:
    StabiliserMap() = default;
    explicit StabiliserMap(std::size_t qubits) : x_(qubits), z_(qubits) {}

    std::size_t qubit_count() const noexcept { return x_.size(); }

    const std::vector<std::size_t> &x_image(std::size_t q) const { return x_.at(q); }
    const std::vector<std::size_t> &z_image(std::size_t q) const { return z_.at(q); }

    /// Images are stored sorted and deduplicated.
    void set_x_image(std::size_t q, std::vector<std::size_t> image);
    void set_z_image(std::size_t q, std::vector<std::size_t> image);

    /// Functional inverse of both parts over GF(2). Throws ShapeMismatch if a
    /// part is singular.
    StabiliserMap inverse() const;

    /// Lines `X<q> -> X{a,b}` then `Z<q> -> Z{...}`.
    std::string to_report() const;
    static StabiliserMap parse_report(std::string_view text);

    /// The map of a single CNOT on `qubits` qubits.
    static StabiliserMap single_cnot(std::size_t qubits, std::size_t control, std::size_t target);
    static StabiliserMap identity(std::size_t qubits);

    bool operator==(const StabiliserMap &) const = default;

  private:
    std::vector<std::vector<std::size_t>> x_;
    std::vector<std::vector<std::size_t>> z_;
};

}  // namespace ccnot
