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

#include "dsc/pauli.h"
#include "support/gen.h"
#include "support/statevector.h"

using namespace dsc;

// 9-qubit fragment labels 1..9 live at indices 0..8.
static PauliString frag(char c, std::initializer_list<std::size_t> labels) {
    PauliString p(9);
    for (auto l : labels) p.set(l - 1, c);
    return p;
}

TEST(pauli, parse_and_str_round_trip) {
    for (const char* s : {"ZIIZZ", "-ZIIZZ", "XYZI", "-Y", "iXX", "-iZ"}) {
        EXPECT_EQ(PauliString::parse(s).str(), s);
    }
    EXPECT_EQ(PauliString::parse("+X_Z").str(), "XIZ");
    EXPECT_THROW(PauliString::parse("XQ"), std::invalid_argument);
}

TEST(pauli, identity_product) {
    auto p = PauliString::parse("-XYZ");
    EXPECT_EQ(PauliString(3) * p, p);
    EXPECT_EQ(PauliString(3).sign(), 1);
    EXPECT_EQ(PauliString(3).weight(), 0u);
}

TEST(pauli, superstabilizer_product) {
    auto a = frag('Z', {2, 4, 5, 7});
    auto b = frag('Z', {3, 5, 6, 8});
    EXPECT_EQ(a * b, frag('Z', {2, 3, 4, 6, 7, 8}));
}

TEST(pauli, involution) {
    auto x1 = frag('X', {1});
    EXPECT_EQ(x1 * x1, PauliString(9));
}

TEST(pauli, single_qubit_table) {
    auto X = PauliString::parse("X"), Y = PauliString::parse("Y"), Z = PauliString::parse("Z");
    EXPECT_EQ((X * Y).str(), "iZ");
    EXPECT_EQ((Y * X).str(), "-iZ");
    EXPECT_EQ((Y * Z).str(), "iX");
    EXPECT_EQ((Z * Y).str(), "-iX");
    EXPECT_EQ((Z * X).str(), "iY");
    EXPECT_EQ((X * Z).str(), "-iY");
}

TEST(pauli, commutation_examples) {
    EXPECT_FALSE(commutes(PauliString::parse("XI"), PauliString::parse("ZI")));
    EXPECT_TRUE(commutes(PauliString::parse("XX"), PauliString::parse("ZZ")));
    EXPECT_FALSE(commutes(frag('X', {5}), frag('Z', {2, 4, 5, 7})));
}

TEST(pauli, size_mismatch) {
    EXPECT_THROW(PauliString(2) * PauliString(3), DimensionError);
    EXPECT_THROW(commutes(PauliString(2), PauliString(3)), DimensionError);
}

TEST(pauli, sign_rejects_imaginary) {
    EXPECT_THROW(PauliString::parse("iX").sign(), std::logic_error);
}

TEST(pauli, associativity_property) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 16;
        auto a = oracle::random_pauli(n, rng, false);
        auto b = oracle::random_pauli(n, rng, false);
        auto c = oracle::random_pauli(n, rng, false);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(pauli, commutation_properties) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 16;
        auto a = oracle::random_pauli(n, rng);
        auto b = oracle::random_pauli(n, rng);
        EXPECT_EQ(commutes(a, b), commutes(b, a));
        EXPECT_TRUE(commutes(a, a));
        auto ab = a * b, ba = b * a;
        EXPECT_TRUE(ab.same_pauli(ba));
        EXPECT_EQ(ab == ba, commutes(a, b));
        EXPECT_EQ(ab == -ba, !commutes(a, b));
    }
}

TEST(pauli, word_boundary_products) {
    // Products across the 64-qubit word boundary must match qubit-by-qubit products.
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 60 + rng() % 80;
        auto a = oracle::random_pauli(n, rng, false);
        auto b = oracle::random_pauli(n, rng, false);
        PauliString expect(n);
        std::uint8_t log = a.log_i() + b.log_i();
        for (std::size_t q = 0; q < n; ++q) {
            PauliString sa(1), sb(1);
            sa.set(0, a.at(q));
            sb.set(0, b.at(q));
            auto s = sa * sb;
            log += s.log_i();
            expect.set(q, s.at(0));
        }
        expect.set_log_i(log);
        EXPECT_EQ(a * b, expect);
    }
}

TEST(pauli, matches_dense_matrices) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 4;
        auto a = oracle::random_pauli(n, rng, false);
        auto b = oracle::random_pauli(n, rng, false);
        oracle::StateVector sv(n);
        for (std::size_t q = 0; q < n; ++q) sv.h(q);
        sv.s(0);
        auto lhs = sv.apply(a, sv.apply(b, sv.amps()));
        auto rhs = sv.apply(a * b, sv.amps());
        for (std::size_t k = 0; k < lhs.size(); ++k) EXPECT_LT(std::abs(lhs[k] - rhs[k]), 1e-9);
    }
}

TEST(pauli, independent_count_counts_rank) {
    std::vector<PauliString> ops = {PauliString::parse("ZZI"), PauliString::parse("IZZ"), PauliString::parse("ZIZ")};
    EXPECT_EQ(independent_count(ops), 2u);
    ops.push_back(PauliString::parse("XXX"));
    EXPECT_EQ(independent_count(ops), 3u);
}
