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

#include <gtest/gtest.h>

#include "dsc/tableau.h"
#include "support/gen.h"
#include "support/statevector.h"

using namespace dsc;
using oracle::StateVector;

namespace {

PauliString P(const char* s) { return PauliString::parse(s); }

void apply_both(StabilizerTableau& t, StateVector& sv, const oracle::RandomOp& op) {
    switch (op.kind) {
        case oracle::RandomOp::H: t.h(op.a); sv.h(op.a); break;
        case oracle::RandomOp::S: t.s(op.a); sv.s(op.a); break;
        case oracle::RandomOp::CNOT: t.cnot(op.a, op.b); sv.cnot(op.a, op.b); break;
        case oracle::RandomOp::PAULI: t.apply_pauli(op.p); sv.apply_pauli(op.p); break;
        case oracle::RandomOp::MEASURE: break;
    }
}

bool generators_valid(const StabilizerTableau& t) {
    auto g = t.stabilizers();
    auto d = t.destabilizers();
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) {
            if (!commutes(g[a], g[b])) return false;
            if (commutes(d[a], g[b]) != (a != b)) return false;
        }
    }
    return independent_count(g) == t.n_qubits();
}

}  // namespace

TEST(tableau, new_state) {
    auto t = StabilizerTableau::new_state(2);
    EXPECT_EQ(t.expectation(P("ZI")), Expectation::Plus);
    EXPECT_EQ(t.expectation(P("IZ")), Expectation::Plus);
    auto p = StabilizerTableau::new_state(1, Basis::Plus);
    EXPECT_EQ(p.expectation(P("X")), Expectation::Plus);
    EXPECT_THROW(StabilizerTableau::new_state(0), std::invalid_argument);
}

TEST(tableau, measure_xxx_then_zz) {
    auto t = StabilizerTableau::new_state(3);
    t.measure_pauli(P("XXX"));
    auto r = t.measure_pauli(P("ZZI"));
    EXPECT_TRUE(r.deterministic);
    EXPECT_EQ(r.outcome, +1);
}

TEST(tableau, hadamard_and_bell) {
    auto t = StabilizerTableau::new_state(1);
    t.h(0);
    EXPECT_EQ(t.expectation(P("X")), Expectation::Plus);

    auto b = StabilizerTableau::new_state(2);
    b.h(0);
    b.cnot(0, 1);
    std::vector<PauliString> bell = {P("XX"), P("ZZ")};
    EXPECT_EQ(b.canonicalize(), canonical_generators(bell));
}

TEST(tableau, two_cnot_cat_fragment) {
    // CNOT[2,1] CNOT[0,1] |+ 0 +> is the even-parity superposition over qubits 0 and 2
    // with qubit 1 holding their parity.
    auto t = StabilizerTableau::new_state(3);
    t.h(0);
    t.h(2);
    t.cnot(0, 1);
    t.cnot(2, 1);
    StateVector sv(3);
    sv.h(0);
    sv.h(2);
    sv.cnot(0, 1);
    sv.cnot(2, 1);
    // Four equal-weight terms |000>, |110>, |011>, |101> written as (q0 q1 q2).
    for (std::size_t b = 0; b < 8; ++b) {
        bool q0 = b & 1, q1 = b & 2, q2 = b & 4;
        double expect = (q1 == (q0 != q2)) ? 0.5 : 0.0;
        EXPECT_NEAR(std::abs(sv.amps()[b]), expect, 1e-9);
    }
    for (const auto& g : t.stabilizers()) EXPECT_NEAR(sv.expectation(g), 1.0, 1e-9) << g;
}

TEST(tableau, repeatable_measurement) {
    auto t = StabilizerTableau::new_state(2, Basis::Zeros, 5);
    auto a = t.measure_pauli(P("XX"));
    auto b = t.measure_pauli(P("XX"));
    EXPECT_FALSE(a.deterministic);
    EXPECT_TRUE(b.deterministic);
    EXPECT_EQ(a.outcome, b.outcome);
}

TEST(tableau, forced_outcomes) {
    auto t = StabilizerTableau::new_state(1);
    auto r = t.measure_pauli(P("X"), -1);
    EXPECT_TRUE(r.forced);
    EXPECT_EQ(r.outcome, -1);
    EXPECT_EQ(t.expectation(P("X")), Expectation::Minus);
    EXPECT_EQ(t.measure_pauli(P("X"), -1).outcome, -1);
    EXPECT_THROW(t.measure_pauli(P("X"), +1), ContradictionError);
}

TEST(tableau, signed_operator_measurement) {
    auto t = StabilizerTableau::new_state(1);
    EXPECT_EQ(t.measure_pauli(P("-Z")).outcome, -1);
    t.measure_pauli(P("-X"), +1);
    EXPECT_EQ(t.expectation(P("X")), Expectation::Minus);
}

TEST(tableau, argument_errors) {
    auto t = StabilizerTableau::new_state(2);
    EXPECT_THROW(t.cnot(0, 0), std::invalid_argument);
    EXPECT_THROW(t.h(2), std::out_of_range);
    EXPECT_THROW(t.measure_pauli(P("II")), std::invalid_argument);
    EXPECT_THROW(t.measure_pauli(P("iXX")), std::invalid_argument);
    EXPECT_THROW(t.measure_pauli(P("X")), DimensionError);
    std::vector<PauliString> imag = {P("iZI"), P("IZ")};
    EXPECT_THROW(StabilizerTableau::from_generators(imag), std::invalid_argument);
    std::vector<PauliString> anti = {P("XI"), P("ZI")};
    EXPECT_THROW(StabilizerTableau::from_generators(anti), std::invalid_argument);
    std::vector<PauliString> short_rank = {P("ZZ")};
    EXPECT_THROW(StabilizerTableau::from_generators(short_rank), std::invalid_argument);
}

TEST(tableau, canonical_forms) {
    std::vector<PauliString> a = {P("ZZ"), P("IZ")}, b = {P("ZI"), P("IZ")};
    EXPECT_TRUE(states_equal(StabilizerTableau::from_generators(a), StabilizerTableau::from_generators(b)));
    std::vector<PauliString> c = {P("-YY"), P("XX")};
    std::vector<PauliString> d = {P("XX"), P("ZZ")};
    EXPECT_TRUE(states_equal(StabilizerTableau::from_generators(c), StabilizerTableau::from_generators(d)));
    std::vector<PauliString> e = {P("XX"), P("-ZZ")};
    EXPECT_FALSE(states_equal(StabilizerTableau::from_generators(e), StabilizerTableau::from_generators(d)));
    auto canon = canonical_generators(d);
    EXPECT_EQ(canonical_generators(canon), canon);
}

TEST(tableau, expectation_is_pure) {
    std::mt19937_64 rng(3);
    auto t = StabilizerTableau::new_state(5, Basis::Zeros, 1);
    StateVector sv(5);
    for (int i = 0; i < 40; ++i) apply_both(t, sv, oracle::random_op(5, rng));
    auto before = t;
    for (int i = 0; i < 50; ++i) t.expectation(oracle::random_pauli(5, rng));
    EXPECT_TRUE(states_equal(before, t));
    EXPECT_EQ(before.data(), t.data());
}

TEST(tableau, with_ancillas_appends_zeros) {
    auto t = StabilizerTableau::new_state(2);
    t.h(0);
    t.cnot(0, 1);
    auto w = t.with_ancillas(2);
    std::vector<PauliString> expect = {P("XXII"), P("ZZII"), P("IIZI"), P("IIIZ")};
    EXPECT_TRUE(states_equal(w, StabilizerTableau::from_generators(expect)));
    EXPECT_TRUE(generators_valid(w));
}

TEST(tableau, agrees_with_state_vector) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 6;
        auto t = StabilizerTableau::new_state(n, Basis::Zeros, rng());
        t.set_backend(trial % 2 ? Backend::Serial : Backend::Parallel);
        StateVector sv(n);
        std::size_t len = 1 + rng() % 200;
        for (std::size_t step = 0; step < len; ++step) {
            auto op = oracle::random_op(n, rng);
            if (op.kind != oracle::RandomOp::MEASURE) {
                apply_both(t, sv, op);
                continue;
            }
            double ev = sv.expectation(op.p);
            auto rec = t.measure_pauli(op.p);
            ASSERT_EQ(rec.deterministic, std::abs(std::abs(ev) - 1.0) < 1e-9) << op.p << " ev=" << ev;
            if (rec.deterministic) {
                ASSERT_NEAR(ev, rec.outcome, 1e-9);
            } else {
                ASSERT_NEAR(ev, 0.0, 1e-9);
            }
            sv.project(op.p, rec.outcome);
            for (const auto& g : t.stabilizers()) ASSERT_NEAR(sv.expectation(g), 1.0, 1e-9) << g;
        }
        EXPECT_TRUE(generators_valid(t));
    }
}

TEST(tableau, serial_and_parallel_backends_agree) {
    // Large enough that the parallel kernels split across threads.
    std::mt19937_64 rng(99);
    const std::size_t n = 300;
    auto a = StabilizerTableau::new_state(n, Basis::Zeros, 7);
    auto b = StabilizerTableau::new_state(n, Basis::Zeros, 7);
    a.set_backend(Backend::Serial);
    b.set_backend(Backend::Parallel);
    for (int step = 0; step < 400; ++step) {
        auto op = oracle::random_op(n, rng);
        if (op.kind == oracle::RandomOp::MEASURE) {
            PauliString p(n);
            for (int k = 0; k < 4; ++k) p.set(rng() % n, "XYZ"[rng() % 3]);
            if (p.is_identity()) continue;
            auto ra = a.measure_pauli(p);
            auto rb = b.measure_pauli(p, ra.deterministic ? std::nullopt : std::optional<int>(ra.outcome));
            ASSERT_EQ(ra.outcome, rb.outcome);
            ASSERT_EQ(ra.deterministic, rb.deterministic);
        } else {
            switch (op.kind) {
                case oracle::RandomOp::H: a.h(op.a); b.h(op.a); break;
                case oracle::RandomOp::S: a.s(op.a); b.s(op.a); break;
                case oracle::RandomOp::CNOT: a.cnot(op.a, op.b); b.cnot(op.a, op.b); break;
                default: a.apply_pauli(op.p); b.apply_pauli(op.p); break;
            }
            if (op.kind == oracle::RandomOp::H && step % 7 == 0) {
                a.swap(op.a, op.b);
                b.swap(op.a, op.b);
            }
        }
        ASSERT_EQ(a.data(), b.data()) << "step " << step;
    }
}

TEST(tableau, snapshot_lists_canonical_rows) {
    auto t = StabilizerTableau::new_state(2);
    t.h(0);
    t.cnot(0, 1);
    EXPECT_EQ(t.snapshot(), "XX\nZZ\n");
}

TEST(tableau, from_generators_round_trip) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 12;
        auto t = StabilizerTableau::new_state(n, Basis::Zeros, rng());
        for (int i = 0; i < 60; ++i) {
            auto op = oracle::random_op(n, rng);
            if (op.kind == oracle::RandomOp::MEASURE) {
                t.measure_pauli(op.p);
            } else if (op.kind == oracle::RandomOp::PAULI) {
                t.apply_pauli(op.p);
            } else if (op.kind == oracle::RandomOp::CNOT) {
                t.cnot(op.a, op.b);
            } else {
                op.kind == oracle::RandomOp::H ? t.h(op.a) : t.s(op.a);
            }
        }
        auto gens = t.stabilizers();
        for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
            if (rng() % 2) gens[k] *= gens[k + 1];
        }
        std::shuffle(gens.begin(), gens.end(), rng);
        gens.push_back(gens.front() * gens.back());
        auto rebuilt = StabilizerTableau::from_generators(gens);
        EXPECT_TRUE(states_equal(t, rebuilt));
        gens.back() = -gens.back();
        EXPECT_THROW(StabilizerTableau::from_generators(gens), ContradictionError);
    }
}
