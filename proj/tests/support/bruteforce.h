// Copyright 2026 The dsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive minimum-weight logical search, used as an oracle for the chain-graph distances.

#ifndef DSC_TESTS_BRUTEFORCE_H
#define DSC_TESTS_BRUTEFORCE_H

#include <cstdint>
#include <vector>

#include "dsc/lattice.h"

namespace dsc::oracle {

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline bool search(const std::vector<Bits>& cols, const Bits& target, Bits& acc, std::size_t start, int left) {
    if (acc == target) return true;
    if (left == 0) return false;
    for (std::size_t i = start; i < cols.size(); ++i) {
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] ^= cols[i][k];
        bool hit = search(cols, target, acc, i + 1, left - 1);
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] ^= cols[i][k];
        if (hit) return true;
    }
    return false;
}

}  // namespace detail

/// Smallest weight of a `kind`-type operator that commutes with every stabilizer, anticommutes with
/// the opposite logical of `qubit` and commutes with the opposite logicals of all other qubits.
/// Returns max_weight + 1 if there is none up to max_weight.
inline int min_logical_weight(const Layout& l, std::size_t qubit, Kind kind, int max_weight) {
    std::vector<PauliString> checks;
    for (std::size_t i = 0; i < l.stabilizers.size(); ++i) {
        if (l.stabilizers[i].kind != kind) checks.push_back(l.stabilizer_op(i));
    }
    std::size_t first_logical = checks.size();
    for (std::size_t q = 0; q < l.qubits.size(); ++q) checks.push_back(l.logical(q, other(kind)));

    std::size_t nw = (checks.size() + 63) / 64;
    std::vector<detail::Bits> cols(l.n_data(), detail::Bits(nw, 0));
    for (std::size_t c = 0; c < checks.size(); ++c) {
        for (auto d : checks[c].support()) cols[d][c / 64] |= std::uint64_t{1} << (c % 64);
    }
    detail::Bits target(nw, 0);
    std::size_t t = first_logical + qubit;
    target[t / 64] |= std::uint64_t{1} << (t % 64);

    for (int w = 1; w <= max_weight; ++w) {
        detail::Bits acc(nw, 0);
        if (detail::search(cols, target, acc, 0, w)) return w;
    }
    return max_weight + 1;
}

}  // namespace dsc::oracle

#endif
