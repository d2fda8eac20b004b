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

// Reference kernels: one row at a time, one bit at a time. Kept simple on
// purpose so the parallel kernels have something obvious to be checked against.

#include "dsc/kernels.h"

namespace dsc {

PauliString TableauData::row(std::size_t r) const {
    PauliString p(n);
    std::copy(x_row(r).begin(), x_row(r).end(), p.x_words().begin());
    std::copy(z_row(r).begin(), z_row(r).end(), p.z_words().begin());
    p.set_sign(signs[r] ? -1 : +1);
    return p;
}

void TableauData::set_row(std::size_t r, const PauliString& p) {
    std::copy(p.x_words().begin(), p.x_words().end(), x_row(r).begin());
    std::copy(p.z_words().begin(), p.z_words().end(), z_row(r).begin());
    signs[r] = p.sign() < 0 ? 1 : 0;
}

namespace kernels::serial {
namespace {

void put(std::vector<Word>& bits, std::size_t nw, std::size_t r, std::size_t q, bool v) {
    Word& w = bits[r * nw + q / kWordBits];
    Word m = Word{1} << (q % kWordBits);
    w = v ? (w | m) : (w & ~m);
}

}  // namespace

void h(TableauData& t, std::size_t q) {
    for (std::size_t r = 0; r < t.rows(); ++r) {
        bool x = t.x(r, q), z = t.z(r, q);
        t.signs[r] ^= x && z;
        put(t.xs, t.nw, r, q, z);
        put(t.zs, t.nw, r, q, x);
    }
}

void s(TableauData& t, std::size_t q) {
    for (std::size_t r = 0; r < t.rows(); ++r) {
        bool x = t.x(r, q), z = t.z(r, q);
        t.signs[r] ^= x && z;
        put(t.zs, t.nw, r, q, z != x);
    }
}

void cnot(TableauData& t, std::size_t control, std::size_t target) {
    for (std::size_t r = 0; r < t.rows(); ++r) {
        bool xc = t.x(r, control), zc = t.z(r, control);
        bool xt = t.x(r, target), zt = t.z(r, target);
        t.signs[r] ^= xc && zt && (xt == zc);
        put(t.xs, t.nw, r, target, xt != xc);
        put(t.zs, t.nw, r, control, zc != zt);
    }
}

void swap(TableauData& t, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < t.rows(); ++r) {
        bool xa = t.x(r, a), za = t.z(r, a);
        bool xb = t.x(r, b), zb = t.z(r, b);
        put(t.xs, t.nw, r, a, xb);
        put(t.zs, t.nw, r, a, zb);
        put(t.xs, t.nw, r, b, xa);
        put(t.zs, t.nw, r, b, za);
    }
}

void anticommute_flags(const TableauData& t, const PauliString& p, std::span<std::uint8_t> flags) {
    for (std::size_t r = 0; r < t.rows(); ++r) {
        bool parity = false;
        for (std::size_t q = 0; q < t.n; ++q) {
            parity ^= (t.x(r, q) && p.z(q)) != (t.z(r, q) && p.x(q));
        }
        flags[r] = parity;
    }
}

void pauli_frame(TableauData& t, const PauliString& p) {
    std::vector<std::uint8_t> flags(t.rows());
    anticommute_flags(t, p, flags);
    for (std::size_t r = 0; r < t.rows(); ++r) t.signs[r] ^= flags[r];
}

void multiply_flagged(TableauData& t, std::size_t pivot, std::span<const std::uint8_t> flags) {
    PauliString src = t.row(pivot);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        if (r == pivot || !flags[r]) continue;
        PauliString dst = t.row(r);
        PauliString prod = src * dst;
        // Destabilizer rows may pick up +-i here; only the real part of their sign is kept.
        prod.set_log_i(prod.log_i() & 2);
        t.set_row(r, prod);
    }
}

}  // namespace kernels::serial
}  // namespace dsc
