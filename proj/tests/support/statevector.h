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

// Dense state-vector simulator used only as a test oracle. Qubit q is bit q of
// the basis index. Exponential in n; keep n small.

#ifndef DSC_TESTS_STATEVECTOR_H
#define DSC_TESTS_STATEVECTOR_H

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "dsc/pauli.h"

namespace dsc::oracle {

class StateVector {
   public:
    using Amp = std::complex<double>;

    explicit StateVector(std::size_t n) : n_(n), amps_(std::size_t{1} << n, 0.0) { amps_[0] = 1.0; }

    std::size_t n_qubits() const { return n_; }
    const std::vector<Amp>& amps() const { return amps_; }

    void h(std::size_t q) {
        const std::size_t m = std::size_t{1} << q;
        const double k = 1.0 / std::sqrt(2.0);
        for (std::size_t b = 0; b < amps_.size(); ++b) {
            if (b & m) continue;
            Amp a0 = amps_[b], a1 = amps_[b | m];
            amps_[b] = k * (a0 + a1);
            amps_[b | m] = k * (a0 - a1);
        }
    }

    void s(std::size_t q) {
        const std::size_t m = std::size_t{1} << q;
        for (std::size_t b = 0; b < amps_.size(); ++b) {
            if (b & m) amps_[b] *= Amp(0, 1);
        }
    }

    void cnot(std::size_t c, std::size_t t) {
        const std::size_t mc = std::size_t{1} << c, mt = std::size_t{1} << t;
        for (std::size_t b = 0; b < amps_.size(); ++b) {
            if ((b & mc) && !(b & mt)) std::swap(amps_[b], amps_[b | mt]);
        }
    }

    void swap(std::size_t a, std::size_t b) {
        cnot(a, b);
        cnot(b, a);
        cnot(a, b);
    }

    std::vector<Amp> apply(const PauliString& p, const std::vector<Amp>& in) const {
        std::size_t xm = 0, zm = 0;
        int ys = 0;
        for (std::size_t q = 0; q < n_; ++q) {
            if (p.x(q)) xm |= std::size_t{1} << q;
            if (p.z(q)) zm |= std::size_t{1} << q;
            if (p.x(q) && p.z(q)) ++ys;
        }
        static const Amp kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const Amp phase = kPow[(p.log_i() + ys) & 3];
        std::vector<Amp> out(in.size(), 0.0);
        for (std::size_t b = 0; b < in.size(); ++b) {
            double sgn = (std::popcount(b & zm) & 1) ? -1.0 : 1.0;
            out[b ^ xm] += phase * sgn * in[b];
        }
        return out;
    }

    void apply_pauli(const PauliString& p) { amps_ = apply(p, amps_); }

    /// <psi|P|psi>, real for Hermitian P.
    double expectation(const PauliString& p) const {
        auto v = apply(p, amps_);
        Amp acc = 0;
        for (std::size_t b = 0; b < v.size(); ++b) acc += std::conj(amps_[b]) * v[b];
        return acc.real();
    }

    /// Projects onto the `outcome` eigenspace of p and renormalizes. Returns the probability.
    double project(const PauliString& p, int outcome) {
        auto v = apply(p, amps_);
        double norm = 0;
        for (std::size_t b = 0; b < v.size(); ++b) {
            amps_[b] = 0.5 * (amps_[b] + double(outcome) * v[b]);
            norm += std::norm(amps_[b]);
        }
        if (norm > 1e-12) {
            const double k = 1.0 / std::sqrt(norm);
            for (auto& a : amps_) a *= k;
        }
        return norm;
    }

   private:
    std::size_t n_;
    std::vector<Amp> amps_;
};

}  // namespace dsc::oracle

#endif
