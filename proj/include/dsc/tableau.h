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

#ifndef DSC_TABLEAU_H
#define DSC_TABLEAU_H

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsc/kernels.h"
#include "dsc/pauli.h"

namespace dsc {

/// A forced outcome disagreed with a deterministic one.
struct ContradictionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Basis { Zeros, Plus };
enum class Gate { H, S, X, Y, Z, CNOT, SWAP };
enum class Backend { Serial, Parallel };

/// +1, -1, or 0 for "not in the stabilizer group up to sign".
enum class Expectation : int { Minus = -1, Indeterminate = 0, Plus = 1 };

struct MeasurementRecord {
    PauliString op;
    int outcome = +1;
    bool deterministic = false;
    bool forced = false;
};

class StabilizerTableau {
   public:
    StabilizerTableau() = default;
    static StabilizerTableau new_state(std::size_t n, Basis basis = Basis::Zeros, std::uint64_t seed = 0);
    /// The state fixed by `gens`: each generator is measured from |0...0>, then one Pauli frame
    /// sets every sign. Generators must commute, carry a real sign and have rank exactly n;
    /// dependent ones are allowed when their signs agree, otherwise ContradictionError.
    static StabilizerTableau from_generators(std::span<const PauliString> gens, std::uint64_t seed = 0);

    std::size_t n_qubits() const { return data_.n; }

    void apply_clifford(Gate gate, std::span<const std::size_t> qubits);
    void apply_clifford(Gate gate, std::initializer_list<std::size_t> qubits) {
        apply_clifford(gate, std::span<const std::size_t>(qubits.begin(), qubits.size()));
    }
    void h(std::size_t q) { apply_clifford(Gate::H, {q}); }
    void s(std::size_t q) { apply_clifford(Gate::S, {q}); }
    void cnot(std::size_t c, std::size_t t) { apply_clifford(Gate::CNOT, {c, t}); }
    void swap(std::size_t a, std::size_t b) { apply_clifford(Gate::SWAP, {a, b}); }

    /// Applies p as an operator (conjugation flips anticommuting generator signs).
    void apply_pauli(const PauliString& p);

    MeasurementRecord measure_pauli(const PauliString& p, std::optional<int> forced = std::nullopt);
    Expectation expectation(const PauliString& p) const;

    std::vector<PauliString> stabilizers() const;
    std::vector<PauliString> destabilizers() const;
    /// Row-reduced generators: unique per (group, signs).
    std::vector<PauliString> canonicalize() const;
    /// Canonical generators, one per line.
    std::string snapshot() const;

    /// Same state tensored with k fresh |0> qubits appended at the end.
    StabilizerTableau with_ancillas(std::size_t k) const;
    /// Drops the last k qubits, which must each be in |0>. Throws std::invalid_argument otherwise.
    StabilizerTableau without_ancillas(std::size_t k) const;

    void set_backend(Backend b) { backend_ = b; }
    Backend backend() const { return backend_; }
    void seed(std::uint64_t s) { rng_.seed(s); }

    const TableauData& data() const { return data_; }

   private:
    void check_size(const PauliString& p, const char* what) const;
    // Sign of p if +-p is in the group; computed from destabilizer overlaps.
    std::optional<int> resolve(const PauliString& p) const;

    TableauData data_;
    Backend backend_ = Backend::Parallel;
    std::mt19937_64 rng_;
};

bool states_equal(const StabilizerTableau& a, const StabilizerTableau& b);

/// Canonical form of an arbitrary list of commuting generators (dependent rows dropped).
std::vector<PauliString> canonical_generators(std::span<const PauliString> gens);

}  // namespace dsc

#endif
