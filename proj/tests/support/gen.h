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

// Random generators for property tests.

#ifndef DSC_TESTS_GEN_H
#define DSC_TESTS_GEN_H

#include <random>

#include "dsc/pauli.h"
#include "dsc/tableau.h"

namespace dsc::oracle {

inline PauliString random_pauli(std::size_t n, std::mt19937_64& rng, bool hermitian = true) {
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) p.set(q, "IXYZ"[rng() % 4]);
    p.set_log_i(hermitian ? (rng() % 2) * 2 : rng() % 4);
    return p;
}

inline PauliString random_nonidentity(std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        PauliString p = random_pauli(n, rng);
        if (!p.is_identity()) return p;
    }
}

struct RandomOp {
    enum Kind { H, S, CNOT, PAULI, MEASURE } kind;
    std::size_t a = 0, b = 0;
    PauliString p;
};

inline RandomOp random_op(std::size_t n, std::mt19937_64& rng) {
    RandomOp op{static_cast<RandomOp::Kind>(rng() % 5)};
    op.a = rng() % n;
    do {
        op.b = rng() % n;
    } while (n > 1 && op.b == op.a);
    if (op.kind == RandomOp::CNOT && n < 2) op.kind = RandomOp::H;
    if (op.kind == RandomOp::PAULI) op.p = random_pauli(n, rng);
    if (op.kind == RandomOp::MEASURE) op.p = random_nonidentity(n, rng);
    return op;
}

}  // namespace dsc::oracle

#endif
