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

#include <bit>
#include <cstdint>

#include "dsc/kernels.h"

namespace dsc::kernels::parallel {
namespace {

using Index = std::int64_t;

struct Bit {
    std::size_t word;
    unsigned shift;
    Word mask;
};

Bit bit_of(std::size_t q) { return {q / kWordBits, static_cast<unsigned>(q % kWordBits), Word{1} << (q % kWordBits)}; }

}  // namespace

void h(TableauData& t, std::size_t q) {
    const Bit b = bit_of(q);
    const Index rows = static_cast<Index>(t.rows());
#pragma omp parallel for schedule(static) if (t.rows() >= kParallelRowThreshold)
    for (Index r = 0; r < rows; ++r) {
        Word& xw = t.xs[r * t.nw + b.word];
        Word& zw = t.zs[r * t.nw + b.word];
        Word x = xw & b.mask, z = zw & b.mask;
        t.signs[r] ^= static_cast<std::uint8_t>((x & z) >> b.shift);
        xw = (xw & ~b.mask) | z;
        zw = (zw & ~b.mask) | x;
    }
}

void s(TableauData& t, std::size_t q) {
    const Bit b = bit_of(q);
    const Index rows = static_cast<Index>(t.rows());
#pragma omp parallel for schedule(static) if (t.rows() >= kParallelRowThreshold)
    for (Index r = 0; r < rows; ++r) {
        Word x = t.xs[r * t.nw + b.word] & b.mask;
        Word& zw = t.zs[r * t.nw + b.word];
        t.signs[r] ^= static_cast<std::uint8_t>((x & zw) >> b.shift);
        zw ^= x;
    }
}

void cnot(TableauData& t, std::size_t control, std::size_t target) {
    const Bit c = bit_of(control), g = bit_of(target);
    const Index rows = static_cast<Index>(t.rows());
#pragma omp parallel for schedule(static) if (t.rows() >= kParallelRowThreshold)
    for (Index r = 0; r < rows; ++r) {
        Word* xr = t.xs.data() + r * t.nw;
        Word* zr = t.zs.data() + r * t.nw;
        unsigned xc = (xr[c.word] >> c.shift) & 1, zc = (zr[c.word] >> c.shift) & 1;
        unsigned xt = (xr[g.word] >> g.shift) & 1, zt = (zr[g.word] >> g.shift) & 1;
        t.signs[r] ^= static_cast<std::uint8_t>(xc & zt & (xt ^ zc ^ 1u));
        xr[g.word] ^= Word{xc} << g.shift;
        zr[c.word] ^= Word{zt} << c.shift;
    }
}

void swap(TableauData& t, std::size_t a, std::size_t b) {
    const Bit p = bit_of(a), q = bit_of(b);
    const Index rows = static_cast<Index>(t.rows());
#pragma omp parallel for schedule(static) if (t.rows() >= kParallelRowThreshold)
    for (Index r = 0; r < rows; ++r) {
        for (Word* row : {t.xs.data() + r * t.nw, t.zs.data() + r * t.nw}) {
            Word va = (row[p.word] >> p.shift) & 1, vb = (row[q.word] >> q.shift) & 1;
            Word diff = va ^ vb;
            row[p.word] ^= diff << p.shift;
            row[q.word] ^= diff << q.shift;
        }
    }
}

void anticommute_flags(const TableauData& t, const PauliString& p, std::span<std::uint8_t> flags) {
    const auto px = p.x_words();
    const auto pz = p.z_words();
    const Index rows = static_cast<Index>(t.rows());
#pragma omp parallel for schedule(static) if (t.rows() >= kParallelRowThreshold)
    for (Index r = 0; r < rows; ++r) {
        const Word* xr = t.xs.data() + r * t.nw;
        const Word* zr = t.zs.data() + r * t.nw;
        Word acc = 0;
        for (std::size_t k = 0; k < t.nw; ++k) acc ^= (xr[k] & pz[k]) ^ (zr[k] & px[k]);
        flags[r] = static_cast<std::uint8_t>(std::popcount(acc) & 1);
    }
}

void pauli_frame(TableauData& t, const PauliString& p) {
    std::vector<std::uint8_t> flags(t.rows());
    anticommute_flags(t, p, flags);
    for (std::size_t r = 0; r < t.rows(); ++r) t.signs[r] ^= flags[r];
}

void multiply_flagged(TableauData& t, std::size_t pivot, std::span<const std::uint8_t> flags) {
    const Word* px = t.xs.data() + pivot * t.nw;
    const Word* pz = t.zs.data() + pivot * t.nw;
    const std::uint8_t psign = t.signs[pivot];
    const Index rows = static_cast<Index>(t.rows());
    const Index piv = static_cast<Index>(pivot);
#pragma omp parallel for schedule(static) if (t.rows() >= kParallelRowThreshold)
    for (Index r = 0; r < rows; ++r) {
        if (r == piv || !flags[r]) continue;
        Word* xr = t.xs.data() + r * t.nw;
        Word* zr = t.zs.data() + r * t.nw;
        std::uint8_t log_i = product_log_i({px, t.nw}, {pz, t.nw}, {xr, t.nw}, {zr, t.nw});
        log_i = static_cast<std::uint8_t>(log_i + 2 * psign + 2 * t.signs[r]);
        for (std::size_t k = 0; k < t.nw; ++k) {
            xr[k] ^= px[k];
            zr[k] ^= pz[k];
        }
        t.signs[r] = (log_i >> 1) & 1;
    }
}

}  // namespace dsc::kernels::parallel
