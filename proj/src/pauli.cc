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

#include "dsc/pauli.h"

#include <algorithm>
#include <bit>
#include <ostream>

namespace dsc {

PauliString::PauliString(std::size_t n_qubits)
    : n_(n_qubits), xs_(words_for(n_qubits), 0), zs_(words_for(n_qubits), 0) {}

PauliString PauliString::parse(std::string_view text) {
    std::uint8_t log_i = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') log_i = 2;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        log_i = (log_i + 1) & 3;
        ++pos;
    }
    PauliString p(text.size() - pos);
    for (std::size_t q = 0; pos < text.size(); ++pos, ++q) {
        char c = text[pos];
        if (c == '_') c = 'I';
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("bad Pauli character '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
        }
        p.set(q, c);
    }
    p.log_i_ = log_i;
    return p;
}

PauliString PauliString::from_sparse(std::size_t n_qubits, char pauli, std::span<const std::size_t> qubits) {
    PauliString p(n_qubits);
    for (auto q : qubits) {
        if (q >= n_qubits) throw std::out_of_range("qubit index out of range");
        p.set(q, pauli);
    }
    return p;
}

void PauliString::set(std::size_t q, bool x_bit, bool z_bit) {
    Word m = Word{1} << (q % kWordBits);
    auto& xw = xs_[q / kWordBits];
    auto& zw = zs_[q / kWordBits];
    xw = x_bit ? (xw | m) : (xw & ~m);
    zw = z_bit ? (zw | m) : (zw & ~m);
}

void PauliString::set(std::size_t q, char pauli) {
    switch (pauli) {
        case 'I': set(q, false, false); break;
        case 'X': set(q, true, false); break;
        case 'Y': set(q, true, true); break;
        case 'Z': set(q, false, true); break;
        default: throw std::invalid_argument("bad Pauli character");
    }
}

char PauliString::at(std::size_t q) const {
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
    return kChars[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
}

int PauliString::sign() const {
    if (!is_hermitian()) throw std::logic_error("Pauli string " + str() + " carries an imaginary phase");
    return log_i_ == 0 ? +1 : -1;
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < xs_.size(); ++k) w += std::popcount(xs_[k] | zs_[k]);
    return w;
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_; ++q) {
        if (x(q) || z(q)) out.push_back(q);
    }
    return out;
}

PauliString PauliString::operator-() const {
    PauliString r = *this;
    r.log_i_ = (log_i_ + 2) & 3;
    return r;
}

std::uint8_t product_log_i(std::span<const Word> ax, std::span<const Word> az, std::span<const Word> bx,
                           std::span<const Word> bz) {
    // Each anticommuting qubit contributes +i or -i; cnt1 marks the qubits, cnt2 the -i ones.
    std::uint32_t low = 0;
    std::uint32_t high = 0;
    for (std::size_t k = 0; k < ax.size(); ++k) {
        Word x1 = ax[k] ^ bx[k];
        Word z1 = az[k] ^ bz[k];
        Word x1z2 = ax[k] & bz[k];
        Word anti = (bx[k] & az[k]) ^ x1z2;
        Word cnt1 = anti;
        Word cnt2 = (x1 ^ z1 ^ x1z2) & anti;
        low += std::popcount(cnt1);
        high += std::popcount(cnt2);
    }
    return static_cast<std::uint8_t>((low + 2 * high) & 3);
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
    if (n_ != rhs.n_) throw DimensionError("pauli_mul: size mismatch");
    std::uint8_t s = product_log_i(xs_, zs_, rhs.xs_, rhs.zs_);
    for (std::size_t k = 0; k < xs_.size(); ++k) {
        xs_[k] ^= rhs.xs_[k];
        zs_[k] ^= rhs.zs_[k];
    }
    log_i_ = (log_i_ + rhs.log_i_ + s) & 3;
    return *this;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) { return a * b; }

bool commutes(const PauliString& a, const PauliString& b) {
    if (a.n_qubits() != b.n_qubits()) throw DimensionError("commutes: size mismatch");
    auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
    Word acc = 0;
    for (std::size_t k = 0; k < ax.size(); ++k) acc ^= (ax[k] & bz[k]) ^ (az[k] & bx[k]);
    return (std::popcount(acc) & 1) == 0;
}

std::size_t independent_count(std::span<const PauliString> ops) {
    if (ops.empty()) return 0;
    std::size_t n = ops.front().n_qubits();
    std::size_t nw = words_for(n);
    std::vector<std::vector<Word>> rows;
    rows.reserve(ops.size());
    for (const auto& p : ops) {
        if (p.n_qubits() != n) throw DimensionError("independent_count: size mismatch");
        std::vector<Word> row(2 * nw);
        std::copy(p.x_words().begin(), p.x_words().end(), row.begin());
        std::copy(p.z_words().begin(), p.z_words().end(), row.begin() + nw);
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
        std::size_t w = (col < n ? col : col - n) / kWordBits + (col < n ? 0 : nw);
        Word m = Word{1} << ((col < n ? col : col - n) % kWordBits);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & m)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][w] & m) {
                for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] ^= rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(n_ + 2);
    if (log_i_ & 2) out += '-';
    if (log_i_ & 1) out += 'i';
    for (std::size_t q = 0; q < n_; ++q) out += at(q);
    return out;
}

std::ostream& operator<<(std::ostream& out, const PauliString& p) { return out << p.str(); }

}  // namespace dsc
