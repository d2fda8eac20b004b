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

// Row kernels over a packed stabilizer tableau.
//
// Every gate and every measurement update touches each of the 2n tableau rows
// independently, so the kernels come in two flavours with identical signatures:
// `serial` is the reference implementation the tests compare against and
// `parallel` splits the row loop across OpenMP threads.

#ifndef DSC_KERNELS_H
#define DSC_KERNELS_H

#include <cstdint>
#include <span>
#include <vector>

#include "dsc/pauli.h"

namespace dsc {

/// Raw tableau storage. Rows [0, n) are destabilizers, rows [n, 2n) stabilizers.
/// Row r occupies words [r * nw, (r + 1) * nw) of `xs` and `zs`; `signs[r]` is 1 for a minus sign.
struct TableauData {
    std::size_t n = 0;
    std::size_t nw = 0;
    std::vector<Word> xs;
    std::vector<Word> zs;
    std::vector<std::uint8_t> signs;

    explicit TableauData(std::size_t n_qubits = 0)
        : n(n_qubits), nw(words_for(n_qubits)), xs(2 * n * nw, 0), zs(2 * n * nw, 0), signs(2 * n, 0) {}

    std::size_t rows() const { return 2 * n; }
    std::span<Word> x_row(std::size_t r) { return {xs.data() + r * nw, nw}; }
    std::span<Word> z_row(std::size_t r) { return {zs.data() + r * nw, nw}; }
    std::span<const Word> x_row(std::size_t r) const { return {xs.data() + r * nw, nw}; }
    std::span<const Word> z_row(std::size_t r) const { return {zs.data() + r * nw, nw}; }

    bool x(std::size_t r, std::size_t q) const { return (xs[r * nw + q / kWordBits] >> (q % kWordBits)) & 1; }
    bool z(std::size_t r, std::size_t q) const { return (zs[r * nw + q / kWordBits] >> (q % kWordBits)) & 1; }

    PauliString row(std::size_t r) const;
    void set_row(std::size_t r, const PauliString& p);

    bool operator==(const TableauData&) const = default;
};

namespace kernels {

namespace serial {
void h(TableauData& t, std::size_t q);
void s(TableauData& t, std::size_t q);
void cnot(TableauData& t, std::size_t control, std::size_t target);
void swap(TableauData& t, std::size_t a, std::size_t b);
// Conjugation by a Pauli: flips the sign of every row anticommuting with p.
void pauli_frame(TableauData& t, const PauliString& p);
// flags[r] = 1 iff row r anticommutes with p.
void anticommute_flags(const TableauData& t, const PauliString& p, std::span<std::uint8_t> flags);
// row r := row pivot * row r, for every r != pivot with flags[r] set.
void multiply_flagged(TableauData& t, std::size_t pivot, std::span<const std::uint8_t> flags);
}  // namespace serial

// Same contracts as serial::, rows split across OpenMP threads.
namespace parallel {
void h(TableauData& t, std::size_t q);
void s(TableauData& t, std::size_t q);
void cnot(TableauData& t, std::size_t control, std::size_t target);
void swap(TableauData& t, std::size_t a, std::size_t b);
void pauli_frame(TableauData& t, const PauliString& p);
void anticommute_flags(const TableauData& t, const PauliString& p, std::span<std::uint8_t> flags);
void multiply_flagged(TableauData& t, std::size_t pivot, std::span<const std::uint8_t> flags);
}  // namespace parallel

/// Row count below which the parallel kernels stay on the calling thread.
inline constexpr std::size_t kParallelRowThreshold = 256;

}  // namespace kernels
}  // namespace dsc

#endif
