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

#include "dsc/tableau.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace dsc {
namespace {

PauliString single(std::size_t n, std::size_t q, char c) {
    PauliString p(n);
    p.set(q, c);
    return p;
}

std::size_t arity(Gate g) { return (g == Gate::CNOT || g == Gate::SWAP) ? 2 : 1; }

}  // namespace

StabilizerTableau StabilizerTableau::new_state(std::size_t n, Basis basis, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("new_state: need at least one qubit");
    StabilizerTableau t;
    t.data_ = TableauData(n);
    t.rng_.seed(seed);
    const char stab = basis == Basis::Zeros ? 'Z' : 'X';
    const char destab = basis == Basis::Zeros ? 'X' : 'Z';
    for (std::size_t q = 0; q < n; ++q) {
        t.data_.set_row(q, single(n, q, destab));
        t.data_.set_row(n + q, single(n, q, stab));
    }
    return t;
}

StabilizerTableau StabilizerTableau::from_generators(std::span<const PauliString> gens, std::uint64_t seed) {
    if (gens.empty()) throw std::invalid_argument("from_generators: empty generator list");
    const std::size_t n = gens.front().n_qubits();
    for (const auto& g : gens) {
        if (g.n_qubits() != n) throw DimensionError("from_generators: size mismatch");
        if (!g.is_hermitian()) throw std::invalid_argument("from_generators: generator " + g.str() + " has phase +-i");
    }
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            if (!commutes(gens[a], gens[b])) {
                throw std::invalid_argument("from_generators: " + gens[a].str() + " and " + gens[b].str() + " anticommute");
            }
        }
    }
    if (independent_count(gens) != n) throw std::invalid_argument("from_generators: generators are not full rank");
    // Measure every generator, then repair signs with one Pauli frame. Forcing during the
    // measurements is not enough: some generators are already fixed by the |0...0> start.
    StabilizerTableau t = new_state(n, Basis::Zeros, seed);
    for (const auto& g : gens) {
        if (g.is_identity()) {
            if (g.sign() < 0) throw ContradictionError("from_generators: -I in generator list");
            continue;
        }
        PauliString unsigned_g = g;
        unsigned_g.set_sign(+1);
        t.measure_pauli(unsigned_g);
    }
    // Row j of the system: which stabilizer rows compose gens[j], and whether its sign is wrong.
    // A destabilizer product D_S flips gens[j] iff |S & rows(j)| is odd; solve for S.
    const std::size_t nw = words_for(n);
    std::vector<std::vector<Word>> sys;
    std::vector<std::uint8_t> rhs;
    for (const auto& g : gens) {
        std::vector<std::uint8_t> flags(t.data_.rows());
        kernels::serial::anticommute_flags(t.data_, g, flags);
        std::vector<Word> row(nw, 0);
        for (std::size_t r = 0; r < n; ++r) {
            if (flags[r]) row[r / kWordBits] |= Word{1} << (r % kWordBits);
        }
        sys.push_back(std::move(row));
        rhs.push_back(t.expectation(g) == Expectation::Minus);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < sys.size(); ++col) {
        const Word m = Word{1} << (col % kWordBits);
        const std::size_t w = col / kWordBits;
        std::size_t piv = rank;
        while (piv < sys.size() && !(sys[piv][w] & m)) ++piv;
        if (piv == sys.size()) continue;
        std::swap(sys[rank], sys[piv]);
        std::swap(rhs[rank], rhs[piv]);
        for (std::size_t r = 0; r < sys.size(); ++r) {
            if (r != rank && (sys[r][w] & m)) {
                for (std::size_t k = 0; k < nw; ++k) sys[r][k] ^= sys[rank][k];
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < sys.size(); ++r) {
        if (rhs[r]) throw ContradictionError("from_generators: signs are inconsistent");
    }
    PauliString frame(n);
    for (std::size_t r = 0; r < rank; ++r) {
        if (rhs[r]) frame *= t.data_.row(pivot_col[r]);
    }
    frame.set_log_i(0);
    t.apply_pauli(frame);
    return t;
}

void StabilizerTableau::check_size(const PauliString& p, const char* what) const {
    if (p.n_qubits() != data_.n) {
        throw DimensionError(std::string(what) + ": operator has " + std::to_string(p.n_qubits()) +
                             " qubits, state has " + std::to_string(data_.n));
    }
}

void StabilizerTableau::apply_clifford(Gate gate, std::span<const std::size_t> qubits) {
    if (qubits.size() != arity(gate)) throw std::invalid_argument("apply_clifford: wrong number of qubits");
    for (auto q : qubits) {
        if (q >= data_.n) throw std::out_of_range("apply_clifford: qubit " + std::to_string(q) + " out of range");
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) throw std::invalid_argument("apply_clifford: duplicate qubit");
    const bool par = backend_ == Backend::Parallel;
    switch (gate) {
        case Gate::H: par ? kernels::parallel::h(data_, qubits[0]) : kernels::serial::h(data_, qubits[0]); break;
        case Gate::S: par ? kernels::parallel::s(data_, qubits[0]) : kernels::serial::s(data_, qubits[0]); break;
        case Gate::X: apply_pauli(single(data_.n, qubits[0], 'X')); break;
        case Gate::Y: apply_pauli(single(data_.n, qubits[0], 'Y')); break;
        case Gate::Z: apply_pauli(single(data_.n, qubits[0], 'Z')); break;
        case Gate::CNOT:
            par ? kernels::parallel::cnot(data_, qubits[0], qubits[1]) : kernels::serial::cnot(data_, qubits[0], qubits[1]);
            break;
        case Gate::SWAP:
            par ? kernels::parallel::swap(data_, qubits[0], qubits[1]) : kernels::serial::swap(data_, qubits[0], qubits[1]);
            break;
    }
}

void StabilizerTableau::apply_pauli(const PauliString& p) {
    check_size(p, "apply_pauli");
    if (backend_ == Backend::Parallel) {
        kernels::parallel::pauli_frame(data_, p);
    } else {
        kernels::serial::pauli_frame(data_, p);
    }
}

std::optional<int> StabilizerTableau::resolve(const PauliString& p) const {
    const std::size_t n = data_.n;
    std::vector<std::uint8_t> flags(data_.rows());
    if (backend_ == Backend::Parallel) {
        kernels::parallel::anticommute_flags(data_, p, flags);
    } else {
        kernels::serial::anticommute_flags(data_, p, flags);
    }
    for (std::size_t r = n; r < 2 * n; ++r) {
        if (flags[r]) return std::nullopt;
    }
    PauliString acc(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (flags[r]) acc *= data_.row(n + r);
    }
    if (!acc.same_pauli(p)) throw std::logic_error("tableau is inconsistent: commuting operator not in group");
    return acc.sign() * p.sign();
}

MeasurementRecord StabilizerTableau::measure_pauli(const PauliString& p, std::optional<int> forced) {
    check_size(p, "measure_pauli");
    if (p.is_identity()) throw std::invalid_argument("measure_pauli: identity has no measurement");
    if (!p.is_hermitian()) throw std::invalid_argument("measure_pauli: operator " + p.str() + " is not Hermitian");
    if (forced && *forced != 1 && *forced != -1) throw std::invalid_argument("measure_pauli: forced outcome must be +1 or -1");

    const std::size_t n = data_.n;
    std::vector<std::uint8_t> flags(data_.rows());
    if (backend_ == Backend::Parallel) {
        kernels::parallel::anticommute_flags(data_, p, flags);
    } else {
        kernels::serial::anticommute_flags(data_, p, flags);
    }
    std::size_t pivot = 2 * n;
    for (std::size_t r = n; r < 2 * n; ++r) {
        if (flags[r]) {
            pivot = r;
            break;
        }
    }

    MeasurementRecord rec{p, +1, false, false};
    if (pivot == 2 * n) {
        rec.deterministic = true;
        rec.outcome = *resolve(p);
        if (forced && *forced != rec.outcome) {
            throw ContradictionError("measure_pauli: forced " + std::to_string(*forced) + " on " + p.str() +
                                     " but the state fixes " + std::to_string(rec.outcome));
        }
        return rec;
    }

    if (forced) {
        rec.outcome = *forced;
        rec.forced = true;
    } else {
        rec.outcome = (rng_() & 1) ? -1 : +1;
    }
    if (backend_ == Backend::Parallel) {
        kernels::parallel::multiply_flagged(data_, pivot, flags);
    } else {
        kernels::serial::multiply_flagged(data_, pivot, flags);
    }
    data_.set_row(pivot - n, data_.row(pivot));
    PauliString stab = p;
    stab.set_sign(p.sign() * rec.outcome);
    data_.set_row(pivot, stab);
    return rec;
}

Expectation StabilizerTableau::expectation(const PauliString& p) const {
    check_size(p, "expectation");
    if (p.is_identity()) return p.sign() > 0 ? Expectation::Plus : Expectation::Minus;
    auto s = resolve(p);
    if (!s) return Expectation::Indeterminate;
    return *s > 0 ? Expectation::Plus : Expectation::Minus;
}

std::vector<PauliString> StabilizerTableau::stabilizers() const {
    std::vector<PauliString> out;
    for (std::size_t r = data_.n; r < 2 * data_.n; ++r) out.push_back(data_.row(r));
    return out;
}

std::vector<PauliString> StabilizerTableau::destabilizers() const {
    std::vector<PauliString> out;
    for (std::size_t r = 0; r < data_.n; ++r) out.push_back(data_.row(r));
    return out;
}

std::vector<PauliString> canonical_generators(std::span<const PauliString> gens) {
    std::vector<PauliString> rows(gens.begin(), gens.end());
    if (rows.empty()) return rows;
    const std::size_t n = rows.front().n_qubits();
    std::size_t rank = 0;
    // Column order: x_0, z_0, x_1, z_1, ...
    for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
        const std::size_t q = col / 2;
        auto bit = [&](const PauliString& p) { return (col % 2 == 0) ? p.x(q) : p.z(q); };
        std::size_t piv = rank;
        while (piv < rows.size() && !bit(rows[piv])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && bit(rows[r])) rows[r] = rows[rank] * rows[r];
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

std::vector<PauliString> StabilizerTableau::canonicalize() const {
    auto gens = stabilizers();
    return canonical_generators(gens);
}

std::string StabilizerTableau::snapshot() const {
    std::ostringstream out;
    for (const auto& g : canonicalize()) out << g.str() << '\n';
    return out.str();
}

StabilizerTableau StabilizerTableau::with_ancillas(std::size_t k) const {
    const std::size_t n = data_.n;
    const std::size_t m = n + k;
    StabilizerTableau t;
    t.data_ = TableauData(m);
    t.backend_ = backend_;
    t.rng_ = rng_;
    for (std::size_t r = 0; r < n; ++r) {
        for (int half = 0; half < 2; ++half) {
            const std::size_t src = half * n + r;
            const std::size_t dst = half * m + r;
            std::copy(data_.x_row(src).begin(), data_.x_row(src).end(), t.data_.x_row(dst).begin());
            std::copy(data_.z_row(src).begin(), data_.z_row(src).end(), t.data_.z_row(dst).begin());
            t.data_.signs[dst] = data_.signs[src];
        }
    }
    for (std::size_t j = n; j < m; ++j) {
        t.data_.set_row(j, single(m, j, 'X'));
        t.data_.set_row(m + j, single(m, j, 'Z'));
    }
    return t;
}

StabilizerTableau StabilizerTableau::without_ancillas(std::size_t k) const {
    const std::size_t n = data_.n;
    if (k > n) throw std::invalid_argument("cannot drop more qubits than the state has");
    const std::size_t m = n - k;
    for (std::size_t j = m; j < n; ++j) {
        if (expectation(single(n, j, 'Z')) != Expectation::Plus) {
            throw std::invalid_argument("qubit " + std::to_string(j) + " is not in |0>");
        }
    }
    // Every stabilizer commutes with the Z_j of the dropped qubits, so it has no X part there and
    // its Z part there can be multiplied away without changing the sign.
    std::vector<PauliString> gens;
    for (const auto& g : stabilizers()) {
        PauliString h(m);
        h.set_log_i(g.log_i());
        for (std::size_t q = 0; q < m; ++q) h.set(q, g.x(q), g.z(q));
        if (!h.is_identity()) gens.push_back(h);
    }
    StabilizerTableau t = from_generators(gens);
    t.backend_ = backend_;
    t.rng_ = rng_;
    return t;
}

bool states_equal(const StabilizerTableau& a, const StabilizerTableau& b) {
    return a.n_qubits() == b.n_qubits() && a.canonicalize() == b.canonicalize();
}

}  // namespace dsc
