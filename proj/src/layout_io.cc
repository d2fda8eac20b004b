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

#include "dsc/layout_io.h"

#include <algorithm>
#include <fstream>
#include <set>

namespace dsc {

using nlohmann::json;

namespace {

json coords(const std::vector<Coord>& cs) {
    json out = json::array();
    for (Coord c : cs) out.push_back({c.r, c.c});
    return out;
}

std::vector<Coord> coords(const json& j) {
    std::vector<Coord> out;
    for (const auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return out;
}

Role pattern_role(Coord p) {
    if ((p.r + p.c) % 2 != 0) return Role::Data;
    return p.r % 2 != 0 ? Role::AncillaZ : Role::AncillaX;
}

}  // namespace

json layout_to_json(const Layout& l) {
    json j;
    j["width"] = l.width();
    j["height"] = l.height();
    j["roles"] = json::array();
    for (int r = 0; r < l.height(); ++r) {
        for (int c = 0; c < l.width(); ++c) {
            Role role = l.role({r, c});
            if (role != pattern_role({r, c})) j["roles"].push_back({r, c, role_name(role)});
        }
    }
    j["supers"] = json::array();
    for (const auto& s : l.stabilizers) {
        if (!s.is_super) continue;
        j["supers"].push_back({{"kind", std::string(1, kind_char(s.kind))},
                               {"owner", s.owner},
                               {"cells", coords(s.ancilla_plan)},
                               {"support", coords(s.support)}});
    }
    j["qubits"] = json::array();
    for (const auto& q : l.qubits) {
        j["qubits"].push_back({{"name", q.name},
                               {"center", {q.center.r, q.center.c}},
                               {"shape", shape_name(q.spec.shape)},
                               {"thickness", q.spec.thickness},
                               {"lz", q.spec.lz},
                               {"lx", q.spec.lx},
                               {"z_cells", coords(q.z_cells)},
                               {"x_cells", coords(q.x_cells)},
                               {"disabled", coords(q.disabled)},
                               {"z_logical", coords(q.z_logical)},
                               {"x_logical", coords(q.x_logical)},
                               {"declared_distance", q.declared_distance},
                               {"target_distance", q.target_distance}});
    }
    return j;
}

Layout layout_from_json(const json& j) {
    try {
        Layout l(j.at("width").get<int>(), j.at("height").get<int>());
        for (const auto& e : j.value("roles", json::array())) {
            l.set_role({e.at(0).get<int>(), e.at(1).get<int>()}, parse_role(e.at(2).get<std::string>()));
        }
        l.reindex();

        std::set<Coord> merged;
        for (const auto& s : j.value("supers", json::array())) {
            Stabilizer st;
            st.kind = s.at("kind").get<std::string>() == "X" ? Kind::X : Kind::Z;
            st.is_super = true;
            st.owner = s.at("owner").get<int>();
            st.ancilla_plan = coords(s.at("cells"));
            st.support = coords(s.at("support"));
            std::sort(st.support.begin(), st.support.end());
            for (Coord c : st.ancilla_plan) merged.insert(c);
            l.stabilizers.push_back(std::move(st));
        }
        for (int r = 0; r < l.height(); ++r) {
            for (int c = 0; c < l.width(); ++c) {
                Coord a{r, c};
                Role role = l.role(a);
                if (role == Role::Data || role == Role::Disabled || merged.count(a)) continue;
                Stabilizer st;
                st.kind = role == Role::AncillaZ ? Kind::Z : Kind::X;
                st.ancilla_plan = {a};
                int sites = 0;
                for (Coord q : {Coord{r - 1, c}, Coord{r, c - 1}, Coord{r, c + 1}, Coord{r + 1, c}}) {
                    if (!l.in_bounds(q)) continue;
                    ++sites;
                    if (l.role(q) == Role::Data) st.support.push_back(q);
                }
                if (sites < 2 || st.support.empty()) continue;
                std::sort(st.support.begin(), st.support.end());
                l.stabilizers.push_back(std::move(st));
            }
        }

        std::vector<int> recorded;
        for (const auto& q : j.value("qubits", json::array())) {
            DeformationQubit dq;
            dq.name = q.at("name").get<std::string>();
            dq.center = {q.at("center").at(0).get<int>(), q.at("center").at(1).get<int>()};
            dq.spec = {parse_shape(q.at("shape").get<std::string>()), q.value("thickness", 1), q.value("lz", 0),
                       q.value("lx", 0)};
            dq.z_cells = coords(q.at("z_cells"));
            dq.x_cells = coords(q.at("x_cells"));
            dq.disabled = coords(q.value("disabled", json::array()));
            dq.target_distance = q.value("target_distance", 0);
            recorded.push_back(q.value("declared_distance", 0));
            l.qubits.push_back(std::move(dq));
        }
        refresh_qubits(l);
        for (std::size_t i = 0; i < recorded.size(); ++i) {
            if (recorded[i] != 0 && recorded[i] != l.qubits[i].declared_distance) {
                throw LayoutError("qubit " + l.qubits[i].name + " records distance " + std::to_string(recorded[i]) +
                                  " but computes " + std::to_string(l.qubits[i].declared_distance));
            }
        }
        return l;
    } catch (const json::exception& e) {
        throw LayoutError(std::string("bad layout JSON: ") + e.what());
    }
}

void save_layout(const Layout& l, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << layout_to_json(l).dump(1) << '\n';
}

Layout load_layout(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw LayoutError("bad layout JSON in " + path + ": " + e.what());
    }
    return layout_from_json(j);
}

}  // namespace dsc
