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

#include "dsc/lattice.h"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace dsc {

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

std::vector<Coord> neighbours(Coord p) { return {{p.r - 1, p.c}, {p.r, p.c - 1}, {p.r, p.c + 1}, {p.r + 1, p.c}}; }

Role default_role(Coord p) {
    if ((p.r + p.c) % 2 != 0) return Role::Data;
    return (p.r % 2 != 0) ? Role::AncillaZ : Role::AncillaX;
}

std::string str(Coord p) { return "(" + std::to_string(p.r) + "," + std::to_string(p.c) + ")"; }

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Support of a superstabilizer split into the two halves left by the crossing region.
// Two support qubits are linked when they border a common ancilla outside the crossing region.
std::map<Coord, int> super_halves(const Stabilizer& s, const std::vector<Coord>& crossing) {
    std::map<Coord, std::vector<int>> by_cell;
    for (std::size_t i = 0; i < s.support.size(); ++i) {
        for (Coord a : neighbours(s.support[i])) {
            if (!std::binary_search(crossing.begin(), crossing.end(), a)) by_cell[a].push_back(static_cast<int>(i));
        }
    }
    DisjointSets sets(s.support.size());
    for (const auto& [cell, members] : by_cell) {
        for (std::size_t j = 1; j < members.size(); ++j) sets.unite(members[0], members[j]);
    }
    std::map<int, int> label;
    std::map<Coord, int> out;
    for (std::size_t i = 0; i < s.support.size(); ++i) {
        int root = sets.find(static_cast<int>(i));
        auto [it, fresh] = label.try_emplace(root, static_cast<int>(label.size()));
        out[s.support[i]] = it->second;
    }
    if (label.size() != 2) {
        throw LayoutError("malformed qubit: " + std::string(1, kind_char(s.kind)) + " superstabilizer of qubit " +
                          std::to_string(s.owner) + " splits into " + std::to_string(label.size()) +
                          " parts instead of two halves");
    }
    return out;
}

// Check graph for chains of one Pauli kind. Nodes are the checks of the other kind,
// with every superstabilizer split into its two halves, plus one boundary node.
// Each enabled data qubit is an edge.
struct ChainGraph {
    int boundary = 0;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (node, edge)
    std::vector<Coord> edge_qubit;
    std::vector<std::array<int, 2>> terminals;  // per deformation qubit, or {-1,-1}

    ChainGraph(const Layout& l, Kind chain) {
        const Kind check = other(chain);
        std::map<Coord, std::vector<int>> incident;
        int nodes = 0;
        terminals.assign(l.qubits.size(), {-1, -1});
        for (const auto& s : l.stabilizers) {
            if (s.kind != check) continue;
            if (!s.is_super) {
                for (Coord q : s.support) incident[q].push_back(nodes);
                ++nodes;
                continue;
            }
            if (s.owner < 0 || s.owner >= static_cast<int>(l.qubits.size())) {
                throw LayoutError("superstabilizer without an owning qubit");
            }
            const auto& q = l.qubits[s.owner];
            auto halves = super_halves(s, s.kind == Kind::Z ? q.x_cells : q.z_cells);
            for (Coord q : s.support) incident[q].push_back(nodes + halves[q]);
            terminals[s.owner] = {nodes, nodes + 1};
            nodes += 2;
        }
        boundary = nodes++;
        adj.resize(nodes);
        for (Coord q : l.data_qubits()) {
            auto it = incident.find(q);
            if (it == incident.end()) continue;
            const auto& ends = it->second;
            if (ends.size() > 2) {
                throw LayoutError("malformed layout: data qubit " + str(q) + " lies in " + std::to_string(ends.size()) +
                                  " " + std::string(1, kind_char(check)) + " checks");
            }
            int a = ends[0];
            int b = ends.size() == 2 ? ends[1] : boundary;
            int e = static_cast<int>(edge_qubit.size());
            edge_qubit.push_back(q);
            adj[a].push_back({b, e});
            adj[b].push_back({a, e});
        }
    }

    struct Search {
        std::vector<int> dist;
        std::vector<int> via;  // edge used to reach the node
        std::vector<int> prev;
    };

    Search bfs(int source) const {
        Search s{std::vector<int>(adj.size(), kUnreachable), std::vector<int>(adj.size(), -1),
                 std::vector<int>(adj.size(), -1)};
        std::queue<int> frontier;
        s.dist[source] = 0;
        frontier.push(source);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (auto [v, e] : adj[u]) {
                if (s.dist[v] != kUnreachable) continue;
                s.dist[v] = s.dist[u] + 1;
                s.via[v] = e;
                s.prev[v] = u;
                frontier.push(v);
            }
        }
        return s;
    }

    std::vector<Coord> path(const Search& s, int target) const {
        std::vector<Coord> out;
        if (s.dist[target] == kUnreachable) return out;
        for (int v = target; s.prev[v] >= 0; v = s.prev[v]) out.push_back(edge_qubit[s.via[v]]);
        std::sort(out.begin(), out.end());
        return out;
    }
};

int min_pairing(const std::vector<std::vector<int>>& d) {
    const int m = static_cast<int>(d.size());
    std::vector<int> best(std::size_t{1} << m, kUnreachable);
    best[0] = 0;
    for (std::size_t mask = 1; mask < best.size(); ++mask) {
        if (std::popcount(mask) % 2) continue;
        int i = std::countr_zero(mask);
        for (int j = i + 1; j < m; ++j) {
            if (!(mask >> j & 1)) continue;
            int rest = best[mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j)];
            if (rest == kUnreachable || d[i][j] == kUnreachable) continue;
            best[mask] = std::min(best[mask], rest + d[i][j]);
        }
    }
    return best.back();
}

}  // namespace

char kind_char(Kind k) { return k == Kind::X ? 'X' : 'Z'; }

std::string role_name(Role r) {
    switch (r) {
        case Role::Data: return "data";
        case Role::AncillaX: return "ancilla_x";
        case Role::AncillaZ: return "ancilla_z";
        case Role::Disabled: return "disabled";
    }
    return "?";
}

Role parse_role(const std::string& s) {
    for (Role r : {Role::Data, Role::AncillaX, Role::AncillaZ, Role::Disabled}) {
        if (role_name(r) == s) return r;
    }
    throw LayoutError("unknown role '" + s + "'");
}

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::FourFin: return "four_fin";
        case Shape::Bar: return "bar";
        case Shape::Skew: return "skew";
    }
    return "?";
}

Shape parse_shape(const std::string& s) {
    for (Shape v : {Shape::FourFin, Shape::Bar, Shape::Skew}) {
        if (shape_name(v) == s) return v;
    }
    throw LayoutError("unknown shape '" + s + "'");
}

std::string violation_name(Violation::Type t) {
    switch (t) {
        case Violation::Type::Loop: return "loop";
        case Violation::Type::CombinedOperator: return "combined_operator";
        case Violation::Type::BoundaryProximity: return "boundary_proximity";
    }
    return "?";
}

Layout::Layout(int width, int height) : width_(width), height_(height), roles_(std::size_t(width) * height) {
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) roles_[std::size_t(r) * width + c] = default_role({r, c});
    }
    reindex();
}

Role Layout::role(Coord p) const {
    if (!in_bounds(p)) throw LayoutError("coordinate " + str(p) + " out of bounds");
    return roles_[std::size_t(p.r) * width_ + p.c];
}

void Layout::set_role(Coord p, Role role) {
    if (!in_bounds(p)) throw LayoutError("coordinate " + str(p) + " out of bounds");
    roles_[std::size_t(p.r) * width_ + p.c] = role;
}

void Layout::reindex() {
    index_.assign(roles_.size(), -1);
    data_.clear();
    for (int r = 0; r < height_; ++r) {
        for (int c = 0; c < width_; ++c) {
            if (roles_[std::size_t(r) * width_ + c] != Role::Data) continue;
            index_[std::size_t(r) * width_ + c] = static_cast<int>(data_.size());
            data_.push_back({r, c});
        }
    }
}

int Layout::data_index(Coord p) const { return in_bounds(p) ? index_[std::size_t(p.r) * width_ + p.c] : -1; }

PauliString Layout::op(Kind kind, const std::vector<Coord>& support) const {
    PauliString p(data_.size());
    for (Coord q : support) {
        int i = data_index(q);
        if (i < 0) throw LayoutError("operator touches " + str(q) + ", which is not an enabled data qubit");
        p.set(i, kind_char(kind));
    }
    return p;
}

PauliString Layout::logical(std::size_t qubit, Kind kind) const {
    const auto& q = qubits.at(qubit);
    return op(kind, kind == Kind::Z ? q.z_logical : q.x_logical);
}

Layout build_lattice(int width, int height) {
    if (width < 3 || height < 3) throw LayoutError("lattice needs at least 3x3 cells");
    Layout l(width, height);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            Role role = l.role({r, c});
            if (role == Role::Data) continue;
            Stabilizer s;
            s.kind = role == Role::AncillaZ ? Kind::Z : Kind::X;
            for (Coord q : neighbours({r, c})) {
                if (l.in_bounds(q)) s.support.push_back(q);
            }
            if (s.support.size() < 2) continue;
            std::sort(s.support.begin(), s.support.end());
            s.ancilla_plan = {{r, c}};
            l.stabilizers.push_back(std::move(s));
        }
    }
    return l;
}

std::pair<std::vector<Coord>, std::vector<Coord>> region_cells(Coord center, const RegionSpec& spec) {
    const int r0 = center.r, c0 = center.c, t = spec.thickness;
    if ((r0 + c0) % 2 == 0) throw LayoutError("qubit centre " + str(center) + " is not a data position");
    if (t < 1) throw LayoutError("thickness must be at least 1");
    std::vector<Coord> zs, xs;
    auto odd = [](int v) { return v % 2 != 0; };
    switch (spec.shape) {
        case Shape::FourFin: {
            const bool vertical = odd(c0 + t - 1);
            for (int k = 0; k < t; ++k) {
                const int band = -(t - 1) + 2 * k;
                for (int d = -spec.lz; d <= spec.lz; ++d) {
                    Coord z = vertical ? Coord{r0 + d, c0 + band} : Coord{r0 + band, c0 + d};
                    if (odd(z.r) && odd(z.c)) zs.push_back(z);
                }
                for (int d = -spec.lx; d <= spec.lx; ++d) {
                    Coord x = vertical ? Coord{r0 + band, c0 + d} : Coord{r0 + d, c0 + band};
                    if (!odd(x.r) && !odd(x.c)) xs.push_back(x);
                }
            }
            break;
        }
        case Shape::Bar:
        case Shape::Skew: {
            if (t != 1) throw LayoutError(shape_name(spec.shape) + " qubits support thickness 1 only");
            if (odd(r0)) throw LayoutError(shape_name(spec.shape) + " qubit centre must sit on an even row");
            for (int d = -spec.lx; d <= spec.lx; ++d) {
                if (!odd(c0 + d)) xs.push_back({r0, c0 + d});
            }
            if (spec.shape == Shape::Bar) {
                for (int d = -spec.lz; d <= spec.lz; ++d) {
                    if (odd(c0 + d)) {
                        zs.push_back({r0 - 1, c0 + d});
                        zs.push_back({r0 + 1, c0 + d});
                    }
                }
            } else {
                // Staircases leaving the crossing upwards to the right and downwards to the left.
                Coord up{r0 - 1, c0}, down{r0 + 1, c0};
                zs = {up, down};
                for (int i = 1; i <= spec.lz; ++i) {
                    if (i % 2) {
                        up.r -= 2;
                        down.r += 2;
                    } else {
                        up.c += 2;
                        down.c -= 2;
                    }
                    zs.push_back(up);
                    zs.push_back(down);
                }
            }
            break;
        }
    }
    std::sort(zs.begin(), zs.end());
    std::sort(xs.begin(), xs.end());
    return {zs, xs};
}

namespace {

void relink_supers(Layout& l) {
    for (auto& q : l.qubits) q.z_super = q.x_super = -1;
    for (std::size_t i = 0; i < l.stabilizers.size(); ++i) {
        const auto& s = l.stabilizers[i];
        if (!s.is_super || s.owner < 0) continue;
        auto& q = l.qubits.at(s.owner);
        (s.kind == Kind::Z ? q.z_super : q.x_super) = static_cast<int>(i);
    }
}

}  // namespace

DeformationQubit& make_region_qubit(Layout& l, Coord center, const RegionSpec& spec, std::string name) {
    auto [z_cells, x_cells] = region_cells(center, spec);

    std::map<Coord, int> cell_stab;
    for (std::size_t i = 0; i < l.stabilizers.size(); ++i) {
        for (Coord a : l.stabilizers[i].ancilla_plan) cell_stab[a] = static_cast<int>(i);
    }
    std::set<int> merged;
    std::set<Coord> disabled;
    for (const auto* cells : {&z_cells, &x_cells}) {
        const Role want = cells == &z_cells ? Role::AncillaZ : Role::AncillaX;
        std::map<Coord, int> uses;
        for (Coord cell : *cells) {
            if (!l.in_bounds(cell)) throw LayoutError("region cell " + str(cell) + " out of bounds");
            if (l.role(cell) != want) throw LayoutError("region cell " + str(cell) + " has the wrong role");
            auto it = cell_stab.find(cell);
            if (it == cell_stab.end()) throw LayoutError("region cell " + str(cell) + " has no stabilizer");
            if (l.stabilizers[it->second].is_super) {
                throw LayoutError("region cell " + str(cell) + " already belongs to a superstabilizer");
            }
            merged.insert(it->second);
            for (Coord q : neighbours(cell)) {
                if (l.in_bounds(q) && default_role(q) == Role::Data) ++uses[q];
            }
        }
        for (auto [q, n] : uses) {
            if (n >= 2) disabled.insert(q);
        }
    }
    if (!disabled.count(center)) throw LayoutError("regions do not cross at " + str(center));
    for (Coord q : disabled) {
        if (l.role(q) != Role::Data) throw LayoutError("data qubit " + str(q) + " is already disabled");
        for (const auto& s : l.stabilizers) {
            if (s.is_super && std::binary_search(s.support.begin(), s.support.end(), q)) {
                throw LayoutError("qubit " + str(q) + " would be removed from an existing superstabilizer");
            }
        }
    }

    const int owner = static_cast<int>(l.qubits.size());
    auto build_super = [&](Kind kind, const std::vector<Coord>& cells) {
        Stabilizer s{kind, {}, true, cells, owner};
        std::set<Coord> support;
        for (Coord cell : cells) {
            for (Coord q : l.stabilizers[cell_stab[cell]].support) {
                if (!disabled.count(q)) support.insert(q);
            }
        }
        s.support.assign(support.begin(), support.end());
        return s;
    };
    Stabilizer zsup = build_super(Kind::Z, z_cells);
    Stabilizer xsup = build_super(Kind::X, x_cells);

    std::vector<Stabilizer> kept;
    for (std::size_t i = 0; i < l.stabilizers.size(); ++i) {
        if (merged.count(static_cast<int>(i))) continue;
        Stabilizer s = l.stabilizers[i];
        std::erase_if(s.support, [&](Coord q) { return disabled.count(q) > 0; });
        if (!s.support.empty()) kept.push_back(std::move(s));
    }
    kept.push_back(std::move(zsup));
    kept.push_back(std::move(xsup));
    l.stabilizers = std::move(kept);
    for (Coord q : disabled) l.set_role(q, Role::Disabled);
    l.reindex();

    DeformationQubit dq;
    dq.name = name.empty() ? "q" + std::to_string(owner) : std::move(name);
    dq.center = center;
    dq.spec = spec;
    dq.z_cells = z_cells;
    dq.x_cells = x_cells;
    dq.disabled.assign(disabled.begin(), disabled.end());
    l.qubits.push_back(std::move(dq));
    relink_supers(l);

    const auto& zs = l.stabilizers[l.qubits.back().z_super];
    const auto& xs = l.stabilizers[l.qubits.back().x_super];
    PauliString zop = l.op(Kind::Z, zs.support), xop = l.op(Kind::X, xs.support);
    for (std::size_t i = 0; i < l.stabilizers.size(); ++i) {
        const auto& s = l.stabilizers[i];
        const PauliString& mine = s.kind == Kind::X ? zop : xop;
        if (!commutes(mine, l.stabilizer_op(i))) {
            throw LayoutError("superstabilizers of the new qubit anticommute with a stabilizer");
        }
    }
    refresh_qubits(l);
    return l.qubits.back();
}

void refresh_qubits(Layout& l) {
    relink_supers(l);
    if (l.qubits.empty()) return;
    for (Kind chain : {Kind::X, Kind::Z}) {
        ChainGraph g(l, chain);
        for (std::size_t i = 0; i < l.qubits.size(); ++i) {
            auto& q = l.qubits[i];
            auto [a, b] = g.terminals[i];
            if (a < 0) throw LayoutError("qubit " + q.name + " has no " + std::string(1, kind_char(other(chain))) + " superstabilizer");
            auto search = g.bfs(a);
            int d = search.dist[b];
            (chain == Kind::X ? q.x_logical : q.z_logical) = g.path(search, b);
            if (chain == Kind::X) {
                q.declared_distance = d;
            } else {
                q.declared_distance = std::min(q.declared_distance, d);
            }
        }
    }
}

ChainDistance chain_distances(const Layout& l, std::size_t qubit) {
    if (qubit >= l.qubits.size()) throw LayoutError("no qubit " + std::to_string(qubit));
    ChainDistance out;
    for (Kind chain : {Kind::X, Kind::Z}) {
        ChainGraph g(l, chain);
        auto [a, b] = g.terminals[qubit];
        if (a < 0) throw LayoutError("malformed qubit: missing superstabilizer");
        (chain == Kind::X ? out.x : out.z) = g.bfs(a).dist[b];
    }
    return out;
}

int code_distance(const Layout& l, std::size_t qubit) { return chain_distances(l, qubit).min(); }

namespace {

// Shortest chain lengths between all superstabilizer halves: entry [2i+a][2j+b] joins half a
// of qubit i to half b of qubit j.
std::vector<std::vector<int>> terminal_distances(const Layout& l, Kind chain) {
    ChainGraph g(l, chain);
    const std::size_t m = 2 * l.qubits.size();
    std::vector<std::vector<int>> d(m, std::vector<int>(m, kUnreachable));
    for (std::size_t i = 0; i < m; ++i) {
        int src = g.terminals[i / 2][i % 2];
        if (src < 0) throw LayoutError("malformed qubit: missing superstabilizer");
        auto s = g.bfs(src);
        for (std::size_t j = 0; j < m; ++j) d[i][j] = s.dist[g.terminals[j / 2][j % 2]];
    }
    return d;
}

int combined_from(const std::vector<std::vector<int>>& all, const std::vector<std::size_t>& qs) {
    std::vector<std::size_t> idx;
    for (auto q : qs) {
        idx.push_back(2 * q);
        idx.push_back(2 * q + 1);
    }
    std::vector<std::vector<int>> d(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) d[i][j] = all[idx[i]][idx[j]];
    }
    return min_pairing(d);
}

}  // namespace

int min_combined_operator(const Layout& l, const std::vector<std::size_t>& qs, Kind chain) {
    if (qs.empty()) throw LayoutError("min_combined_operator: empty qubit set");
    for (auto q : qs) {
        if (q >= l.qubits.size()) throw LayoutError("no qubit " + std::to_string(q));
    }
    return combined_from(terminal_distances(l, chain), qs);
}

int min_combined_operator(const Layout& l, const std::vector<std::size_t>& qs) {
    return std::min(min_combined_operator(l, qs, Kind::X), min_combined_operator(l, qs, Kind::Z));
}

DeformationQubit& make_deformation_qubit(Layout& l, Coord center, int distance, Shape shape, int thickness,
                                         std::string name) {
    if (distance < 2) throw LayoutError("distance must be at least 2");
    RegionSpec spec{shape, thickness, thickness, thickness};
    int zstep = 2, xstep = 2;
    if (shape == Shape::Bar) {
        spec.lz = 0;
        spec.lx = 1;
    } else if (shape == Shape::Skew) {
        spec.lz = 0;
        spec.lx = 1;
        zstep = 1;
    }
    const std::size_t index = l.qubits.size();
    for (int iter = 0; iter < 4 * (l.width() + l.height()); ++iter) {
        Layout trial = l;
        try {
            make_region_qubit(trial, center, spec, name);
        } catch (const LayoutError& e) {
            throw LayoutError("cannot place a distance-" + std::to_string(distance) + " " + shape_name(shape) +
                              " qubit at " + str(center) + ": " + e.what());
        }
        ChainDistance cd = chain_distances(trial, index);
        if (cd.x >= distance && cd.z >= distance) {
            if (cd.min() != distance) {
                throw LayoutError("distance " + std::to_string(distance) + " is not reachable with " +
                                  shape_name(shape) + " thickness " + std::to_string(thickness) + " (got " +
                                  std::to_string(cd.min()) + ")");
            }
            l = std::move(trial);
            l.qubits[index].target_distance = distance;
            return l.qubits[index];
        }
        if (cd.x < distance) spec.lx += xstep;
        if (cd.z < distance) spec.lz += zstep;
    }
    throw LayoutError("region search did not converge");
}

int logical_count(const Layout& l) {
    std::vector<PauliString> ops;
    ops.reserve(l.stabilizers.size());
    for (std::size_t i = 0; i < l.stabilizers.size(); ++i) ops.push_back(l.stabilizer_op(i));
    return static_cast<int>(l.n_data()) - static_cast<int>(independent_count(ops));
}

std::vector<Violation> placement_check(const Layout& l, std::optional<int> target) {
    std::vector<Violation> out;
    const std::size_t k = l.qubits.size();
    if (k == 0) return out;
    auto target_of = [&](std::size_t q) { return target ? *target : l.qubits[q].target_distance; };

    // Superstabilizers of one kind that share data qubits must form a forest.
    for (Kind kind : {Kind::Z, Kind::X}) {
        std::vector<int> supers;
        for (std::size_t i = 0; i < l.stabilizers.size(); ++i) {
            if (l.stabilizers[i].is_super && l.stabilizers[i].kind == kind) supers.push_back(static_cast<int>(i));
        }
        DisjointSets sets(supers.size());
        for (std::size_t a = 0; a < supers.size(); ++a) {
            for (std::size_t b = a + 1; b < supers.size(); ++b) {
                const auto& sa = l.stabilizers[supers[a]].support;
                const auto& sb = l.stabilizers[supers[b]].support;
                std::vector<Coord> shared;
                std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));
                for (std::size_t e = 0; e < shared.size(); ++e) {
                    if (sets.unite(static_cast<int>(a), static_cast<int>(b))) continue;
                    Violation v{Violation::Type::Loop, {}, 0, ""};
                    int root = sets.find(static_cast<int>(a));
                    for (std::size_t s = 0; s < supers.size(); ++s) {
                        if (sets.find(static_cast<int>(s)) == root) v.qubits.push_back(l.stabilizers[supers[s]].owner);
                    }
                    v.witness = static_cast<int>(v.qubits.size());
                    v.message = std::string(1, kind_char(kind)) + " superstabilizers close a loop through " +
                                str(shared[e]);
                    out.push_back(std::move(v));
                }
            }
        }
    }

    // Every set of two or more qubits, up to kMaxExhaustive qubits; beyond that only
    // qubits whose superstabilizers touch are grouped.
    const auto dx = terminal_distances(l, Kind::X);
    const auto dz = terminal_distances(l, Kind::Z);
    auto combined = [&](const std::vector<std::size_t>& qs) { return std::min(combined_from(dx, qs), combined_from(dz, qs)); };
    constexpr std::size_t kMaxExhaustive = 12;
    DisjointSets cluster(k);
    if (k <= kMaxExhaustive) {
        for (std::size_t q = 1; q < k; ++q) cluster.unite(0, static_cast<int>(q));
    } else {
        auto support_of = [&](std::size_t q) {
            std::set<Coord> s;
            for (int idx : {l.qubits[q].z_super, l.qubits[q].x_super}) {
                for (Coord c : l.stabilizers[idx].support) s.insert(c);
            }
            return s;
        };
        for (std::size_t a = 0; a < k; ++a) {
            auto sa = support_of(a);
            for (std::size_t b = a + 1; b < k; ++b) {
                auto sb = support_of(b);
                bool touch = std::any_of(sb.begin(), sb.end(), [&](Coord c) { return sa.count(c) > 0; });
                if (touch || combined({a, b}) < std::min(target_of(a), target_of(b))) cluster.unite(a, b);
            }
        }
    }
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t q = 0; q < k; ++q) groups[cluster.find(static_cast<int>(q))].push_back(q);
    for (const auto& [root, members] : groups) {
        if (members.size() < 2 || members.size() > 16) continue;
        int best = kUnreachable;
        std::vector<std::size_t> best_set;
        for (std::size_t mask = 1; mask < (std::size_t{1} << members.size()); ++mask) {
            if (std::popcount(mask) < 2) continue;
            std::vector<std::size_t> subset;
            int limit = kUnreachable;
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (mask >> i & 1) {
                    subset.push_back(members[i]);
                    limit = std::min(limit, target_of(members[i]));
                }
            }
            int w = combined(subset);
            if (w < limit && w < best) {
                best = w;
                best_set = subset;
            }
        }
        if (!best_set.empty()) {
            out.push_back({Violation::Type::CombinedOperator, best_set, best,
                           "combined logical operator of weight " + std::to_string(best)});
        }
    }

    for (std::size_t q = 0; q < k; ++q) {
        int d = code_distance(l, q);
        if (d < target_of(q)) {
            out.push_back({Violation::Type::BoundaryProximity, {q}, d,
                           "qubit " + l.qubits[q].name + " has distance " + std::to_string(d) + " below " +
                               std::to_string(target_of(q))});
        }
    }
    return out;
}

StabilizerTableau encode_layout(const Layout& l, std::uint64_t seed) {
    std::vector<PauliString> gens;
    for (std::size_t i = 0; i < l.stabilizers.size(); ++i) gens.push_back(l.stabilizer_op(i));
    for (std::size_t q = 0; q < l.qubits.size(); ++q) gens.push_back(l.logical(q, Kind::Z));
    return StabilizerTableau::from_generators(gens, seed);
}

void inject_error(const Layout& l, StabilizerTableau& t, const std::map<Coord, char>& chain) {
    PauliString p(l.n_data());
    for (auto [q, c] : chain) {
        int i = l.data_index(q);
        if (i < 0) throw LayoutError("error chain touches " + str(q) + ", which is not an enabled data qubit");
        p.set(i, c);
    }
    t.apply_pauli(p);
}

std::vector<std::size_t> extract_syndrome(const Layout& l, const StabilizerTableau& t) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < l.stabilizers.size(); ++i) {
        if (t.expectation(l.stabilizer_op(i)) == Expectation::Minus) out.push_back(i);
    }
    return out;
}

}  // namespace dsc
