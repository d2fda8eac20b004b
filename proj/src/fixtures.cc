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

#include "dsc/fixtures.h"

namespace dsc {
namespace {

// Four qubits related by quarter turns about the centre of a side x side square.
std::vector<Coord> quarter_turns(Coord a, int side, Coord offset) {
    auto rot = [&](Coord p) { return Coord{p.c, side - 1 - p.r}; };
    std::vector<Coord> out = {a, rot(a), rot(rot(a)), rot(rot(rot(a)))};
    for (auto& p : out) p = {p.r + offset.r, p.c + offset.c};
    return out;
}

Fixture stacked_pair(const std::string& name, const std::string& description) {
    Fixture f{name, description, build_lattice(21, 29), {}};
    make_deformation_qubit(f.layout, {10, 9}, 5, Shape::FourFin, 1, "upper");
    make_deformation_qubit(f.layout, {18, 9}, 5, Shape::FourFin, 1, "lower");
    f.marks["shared"] = {14, 9};
    return f;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"fig1", "fig2", "fig4a", "fig4b", "fig7", "fig8", "fig9"}; }

Fixture make_fixture(const std::string& name) {
    if (name == "fig1") {
        Fixture f{name, "distance-3 four-fin qubit on an 11x9 grid", build_lattice(11, 9), {}};
        make_deformation_qubit(f.layout, {4, 5}, 3, Shape::FourFin, 1, "q");
        f.marks["center"] = {4, 5};
        return f;
    }
    if (name == "fig2") return stacked_pair(name, "two distance-5 qubits whose Z superstabilizers share one data qubit");
    if (name == "fig7") return stacked_pair(name, "the fig2 pair, used for combined X operators");
    if (name == "fig4a") {
        Fixture f{name, "bar-form distance-5 qubit", build_lattice(27, 19), {}};
        make_deformation_qubit(f.layout, {8, 13}, 5, Shape::Bar, 1, "bar");
        return f;
    }
    if (name == "fig4b") {
        Fixture f{name, "skew-fin distance-5 qubit", build_lattice(25, 25), {}};
        make_deformation_qubit(f.layout, {12, 13}, 5, Shape::Skew, 1, "skew");
        return f;
    }
    if (name == "fig8") {
        Fixture f{name, "four thickness-2 distance-10 qubits whose superstabilizers close a loop", build_lattice(53, 53), {}};
        const char* names[] = {"north", "east", "south", "west"};
        auto centers = quarter_turns({16, 25}, 53, {0, 0});
        for (int i = 0; i < 4; ++i) make_region_qubit(f.layout, centers[i], {Shape::FourFin, 2, 8, 8}, names[i]);
        for (auto& q : f.layout.qubits) q.target_distance = 10;
        return f;
    }
    if (name == "fig9") {
        // A 39x39 block of four thickness-2 qubits, padded by 20 cells on every side.
        Fixture f{name, "local block of four thickness-2 distance-10 qubits", build_lattice(79, 79), {}};
        const char* names[] = {"a", "b", "c", "d"};
        auto centers = quarter_turns({9, 14}, 39, {20, 20});
        for (int i = 0; i < 4; ++i) make_region_qubit(f.layout, centers[i], {Shape::FourFin, 2, 8, 8}, names[i]);
        for (auto& q : f.layout.qubits) q.target_distance = 10;
        f.marks["block_origin"] = {20, 20};
        f.marks["block_end"] = {58, 58};
        return f;
    }
    throw LayoutError("unknown fixture '" + name + "'");
}

}  // namespace dsc
