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

#ifndef DSC_PAULI_H
#define DSC_PAULI_H

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dsc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t n_bits) { return (n_bits + kWordBits - 1) / kWordBits; }

/// Raised when two operators (or an operator and a state) disagree on qubit count.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A Pauli operator on n qubits, written i^log_i * P_0 (x) ... (x) P_{n-1} with P_q in {I,X,Y,Z}.
///
/// Each qubit is stored as an (x, z) bit pair: I=(0,0), X=(1,0), Y=(1,1), Z=(0,1). Y is the
/// Hermitian Y, so a string with log_i in {0, 2} is Hermitian. Products track the full phase
/// mod 4; stabilizer generators are required to carry a real sign.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t n_qubits);

    /// Parses "-ZIIZZ", "+XY_Z", "iXX". '_' is accepted as identity.
    static PauliString parse(std::string_view text);
    /// Builds e.g. from_sparse(9, "Z", {1, 3, 4, 6}).
    static PauliString from_sparse(std::size_t n_qubits, char pauli, std::span<const std::size_t> qubits);
    static PauliString from_sparse(std::size_t n_qubits, char pauli, std::initializer_list<std::size_t> qubits) {
        return from_sparse(n_qubits, pauli, std::span<const std::size_t>(qubits.begin(), qubits.size()));
    }

    std::size_t n_qubits() const { return n_; }
    std::size_t num_words() const { return xs_.size(); }

    bool x(std::size_t q) const { return (xs_[q / kWordBits] >> (q % kWordBits)) & 1; }
    bool z(std::size_t q) const { return (zs_[q / kWordBits] >> (q % kWordBits)) & 1; }
    void set(std::size_t q, bool x_bit, bool z_bit);
    void set(std::size_t q, char pauli);
    char at(std::size_t q) const;

    std::span<const Word> x_words() const { return xs_; }
    std::span<const Word> z_words() const { return zs_; }
    std::span<Word> x_words() { return xs_; }
    std::span<Word> z_words() { return zs_; }

    /// Phase exponent: the operator carries the scalar i^log_i().
    std::uint8_t log_i() const { return log_i_; }
    void set_log_i(std::uint8_t v) { log_i_ = v & 3; }
    bool is_hermitian() const { return (log_i_ & 1) == 0; }
    /// +1 or -1. Throws std::logic_error when the phase is imaginary.
    int sign() const;
    void set_sign(int s) { log_i_ = s < 0 ? 2 : 0; }

    std::size_t weight() const;
    bool is_identity() const { return weight() == 0; }
    std::vector<std::size_t> support() const;

    /// Pauli part equality, ignoring phase.
    bool same_pauli(const PauliString& other) const { return n_ == other.n_ && xs_ == other.xs_ && zs_ == other.zs_; }

    PauliString operator-() const;
    PauliString& operator*=(const PauliString& rhs);
    friend PauliString operator*(PauliString a, const PauliString& b) { return a *= b; }
    bool operator==(const PauliString& other) const = default;

    std::string str() const;

   private:
    std::size_t n_ = 0;
    std::vector<Word> xs_;
    std::vector<Word> zs_;
    std::uint8_t log_i_ = 0;
};

/// Group product a*b with the phase tracked mod 4.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/// True iff the symplectic inner product of a and b is even.
bool commutes(const PauliString& a, const PauliString& b);

/// Phase exponent s such that (Pauli part of a) * (Pauli part of b) = i^s * (Pauli part of a*b),
/// for unsigned a and b. Word-parallel; exposed for the tableau kernels.
std::uint8_t product_log_i(std::span<const Word> ax, std::span<const Word> az, std::span<const Word> bx,
                           std::span<const Word> bz);

/// Number of GF(2)-independent operators in the list (phases ignored).
std::size_t independent_count(std::span<const PauliString> ops);

std::ostream& operator<<(std::ostream& out, const PauliString& p);

}  // namespace dsc

#endif
