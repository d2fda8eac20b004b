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

#include "dsc/lattice.h"
#include "dsc/resources.h"

using namespace dsc;

TEST(resources, local_block_examples) {
    auto b = local_block(PlacementParams::from_shortened(9));
    EXPECT_EQ(b.side, 35);
    EXPECT_EQ(b.total, 1225);
    EXPECT_EQ(b.logical, 4);
    EXPECT_EQ(local_block({10, 2, 1}).side, 35);
    EXPECT_EQ(local_block({9, 3, 1}).side, 35);
}

TEST(resources, expanded_forms_agree) {
    for (long d = 1; d <= 100; ++d) {
        auto b = local_block(PlacementParams::from_shortened(static_cast<int>(d)));
        EXPECT_EQ(b.side, 3 * d + 8);
        EXPECT_EQ(b.total, 9 * d * d + 48 * d + 64);
        EXPECT_EQ(planar_baseline(static_cast<int>(d)), 16 * d * d - 16 * d + 4);
        double x = static_cast<double>(d);
        EXPECT_DOUBLE_EQ(per_logical(Scheme::Thickness2, static_cast<int>(d)), (25 * x * x + 70 * x + 49) / 4);
        EXPECT_DOUBLE_EQ(per_logical(Scheme::Lengthened, static_cast<int>(d)), (25 * x * x + 120 * x + 144) / 4);
        EXPECT_DOUBLE_EQ(per_logical(Scheme::Abstract, static_cast<int>(d)), (5 * x + 2) * (5 * x + 2) / 4);
        for (int t = 1; t <= 4; ++t) {
            double o = x + t;
            double want = (9 * o * o + 18 * o * t + 9.0 * t * t - 6 * o - 6.0 * t + 1) / 4;
            auto lb = local_block({static_cast<int>(d) + t, t, 1});
            EXPECT_DOUBLE_EQ(static_cast<double>(lb.total) / 4, want);
            double g = (25 * o * o + 30 * o * t + 9.0 * t * t - 40 * o - 24.0 * t + 16) / 4;
            EXPECT_DOUBLE_EQ(global_per_logical_limit(static_cast<int>(d) + t, t), g);
        }
    }
}

TEST(resources, global_grid) {
    auto g = global_grid({10, 2, 1});
    EXPECT_EQ(g.side, 71);
    EXPECT_EQ(g.total, 5041);
    EXPECT_EQ(g.logical, 4);
    // The per-logical count approaches the large-n limit from above.
    double limit = global_per_logical_limit(10, 2);
    double prev = g.per_logical();
    for (int n = 2; n <= 64; n *= 2) {
        double now = global_grid({10, 2, n}).per_logical();
        EXPECT_LT(now, prev);
        EXPECT_GT(now, limit);
        prev = now;
    }
    EXPECT_NEAR(global_grid({10, 2, 4096}).per_logical(), limit, 0.5);
    // With t = 2 the limit is (5 d_s + 7)^2 / 4.
    EXPECT_DOUBLE_EQ(limit, per_logical(Scheme::Thickness2, 9));
    EXPECT_DOUBLE_EQ(per_logical(Scheme::Thickness2, 9), 676);
}

TEST(resources, planar_examples) {
    EXPECT_EQ(planar_baseline(1), 4);
    EXPECT_EQ(planar_baseline(3), 100);
    EXPECT_EQ(planar_baseline(10), 1444);
    EXPECT_THROW(planar_baseline(0), std::invalid_argument);
}

TEST(resources, reduction_at_fifteen) {
    auto r = compare(15, 15, {Scheme::Abstract});
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_DOUBLE_EQ(r.rows[0].per_logical, 1482.25);
    EXPECT_EQ(r.rows[0].planar, 3364);
    EXPECT_NEAR(r.rows[0].reduction_pct, 55.94, 0.01);
    EXPECT_NEAR(r.rows[0].reduction_pct, 55.0, 2.0);
    EXPECT_DOUBLE_EQ(r.asymptotic_ratio, 25.0 / 64.0);
    EXPECT_NEAR(100 * (1 - per_logical(Scheme::Abstract, 100000) / planar_baseline(100000)), 60.94, 0.01);
}

TEST(resources, counts_increase_with_distance) {
    for (auto s : all_schemes()) {
        for (int d = 1; d < 100; ++d) EXPECT_LT(per_logical(s, d), per_logical(s, d + 1)) << scheme_name(s);
    }
}

TEST(resources, csv_layout) {
    auto csv = report_csv(compare(15, 16));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "d,scheme,per_logical,planar,reduction_pct");
    EXPECT_NE(csv.find("\n15,abstract,1482.25,3364,55.94\n"), std::string::npos);
    EXPECT_NE(csv.find("\n15,thickness2,1681,3364,50.03\n"), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2 * 4);
    auto j = report_json(compare(9, 9, {Scheme::LocalBlock}));
    EXPECT_DOUBLE_EQ(j["rows"][0]["per_logical"].get<double>(), 1225.0 / 4);
    EXPECT_FALSE(j["notes"].empty());
}

TEST(resources, block_side_matches_lattice_sites) {
    auto b = local_block(PlacementParams::from_shortened(9));
    auto l = build_lattice(static_cast<int>(b.side), static_cast<int>(b.side));
    EXPECT_EQ(static_cast<long>(l.height()) * l.width(), b.total);
}

TEST(resources, routing_constraint) {
    for (int d = 2; d <= 20; d += 2) {
        EXPECT_TRUE(routing_ok(d, d / 2, d / 2, d));
        EXPECT_FALSE(routing_ok(d, d / 2 - 1, d / 2, d));
    }
}

TEST(resources, argument_errors) {
    EXPECT_THROW(compare(5, 4), std::invalid_argument);
    EXPECT_THROW(compare(3, 4, {}), std::invalid_argument);
    EXPECT_THROW(local_block({2, 3, 1}), std::invalid_argument);
    EXPECT_THROW(parse_scheme("planar"), std::invalid_argument);
    EXPECT_THROW(routing_ok(3, -1, 0, 0), std::invalid_argument);
}
