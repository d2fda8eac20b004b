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

#include "dsc/cat.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace dsc {

namespace {

PauliString single_op(std::size_t n, std::size_t q, char c) {
    PauliString p(n);
    p.set(q, c);
    return p;
}

std::vector<std::string> register_labels(const CatCircuit& c, std::size_t n, std::size_t offset) {
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < offset && i < n; ++i) out[i] = "q" + std::to_string(i);
    auto cat = c.labels();
    for (std::size_t i = 0; i < cat.size() && offset + i < n; ++i) out[offset + i] = cat[i];
    return out;
}

}  // namespace

std::string topology_name(CatTopology t) { return t == CatTopology::Loop ? "loop" : "linear"; }

CatTopology parse_topology(const std::string& s) {
    if (s == "linear") return CatTopology::Linear;
    if (s == "loop") return CatTopology::Loop;
    throw std::invalid_argument("unknown topology '" + s + "' (expected linear or loop)");
}

std::vector<std::string> CatCircuit::labels() const {
    std::vector<std::string> out(n_qubits());
    for (std::size_t k = 0; k < cat_qubits.size(); ++k) out[cat_qubits[k]] = "c" + std::to_string(k);
    for (std::size_t k = 0; k < ancillas.size(); ++k) out[ancillas[k]] = "a" + std::to_string(k);
    return out;
}

CatCircuit build_cat(std::size_t n, CatTopology topology) {
    if (n < 2) throw std::invalid_argument("a cat state needs at least 2 qubits");
    CatCircuit c;
    c.n = n;
    c.topology = topology;
    for (std::size_t k = 0; k < n; ++k) c.cat_qubits.push_back(2 * k);
    std::size_t n_anc = topology == CatTopology::Loop ? n : n - 1;
    for (std::size_t k = 0; k < n_anc; ++k) c.ancillas.push_back(2 * k + 1);

    std::vector<CatGate> h, left, right, meas, fix;
    for (auto q : c.cat_qubits) h.push_back({"H", {q}, {}});
    for (std::size_t k = 0; k < n_anc; ++k) {
        left.push_back({"CNOT", {c.cat_qubits[k], c.ancillas[k]}, {}});
        right.push_back({"CNOT", {c.cat_qubits[(k + 1) % n], c.ancillas[k]}, {}});
        meas.push_back({"M", {c.ancillas[k]}, {}});
        fix.push_back({"X", {c.ancillas[k]}, {c.ancillas[k]}});
    }
    // Cat qubit j is flipped when the parities between it and cat qubit 0 multiply to -1.
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<std::size_t> cond(c.ancillas.begin(), c.ancillas.begin() + static_cast<std::ptrdiff_t>(j));
        fix.push_back({"X", {c.cat_qubits[j]}, cond});
    }
    c.layers = {h, left, right, meas, fix};
    return c;
}

void run_cat(StabilizerTableau& t, const CatCircuit& c, ProtocolTrace& trace, std::size_t offset,
             const ProtocolOptions& options) {
    const std::size_t n = t.n_qubits();
    if (offset + c.n_qubits() > n) throw std::invalid_argument("cat circuit does not fit in the register");
    std::map<std::size_t, int> outcome;
    for (const auto& layer : c.layers) {
        PauliString fixes(n);
        bool has_fix = false;
        for (const auto& g : layer) {
            if (g.gate == "H") {
                t.h(offset + g.qubits[0]);
            } else if (g.gate == "CNOT") {
                t.cnot(offset + g.qubits[0], offset + g.qubits[1]);
            } else if (g.gate == "M") {
                std::string label = "prep_a" + std::to_string((g.qubits[0] - 1) / 2);
                auto it = options.forced.find(label);
                auto op = single_op(n, offset + g.qubits[0], 'Z');
                auto rec = t.measure_pauli(op, it == options.forced.end() ? std::nullopt : std::optional<int>(it->second));
                outcome[g.qubits[0]] = rec.outcome;
                trace.add({label, trace.pauli_text(op), rec, std::nullopt});
            } else if (g.gate == "X") {
                int parity = 1;
                for (auto a : g.condition) parity *= outcome.at(a);
                if (parity < 0) {
                    fixes.set(offset + g.qubits[0], 'X');
                    has_fix = true;
                }
            }
        }
        if (layer.front().gate == "X") {
            if (has_fix) t.apply_pauli(fixes);
            trace.add({"fix", "", std::nullopt, has_fix ? fixes : PauliString(n)});
        }
    }
}

std::vector<PauliString> ghz_generators(std::size_t n) {
    std::vector<PauliString> out;
    PauliString x(n);
    for (std::size_t q = 0; q < n; ++q) x.set(q, 'X');
    out.push_back(x);
    for (std::size_t q = 0; q + 1 < n; ++q) {
        PauliString z(n);
        z.set(q, 'Z');
        z.set(q + 1, 'Z');
        out.push_back(z);
    }
    return out;
}

int verification_rounds(int d, CatTopology topology) {
    if (d < 2) throw std::invalid_argument("distance must be at least 2");
    return topology == CatTopology::Loop ? (d + 1) / 2 : d - 1;
}

ProtocolTrace verify_cat(StabilizerTableau& t, const CatCircuit& c, int rounds, std::size_t offset,
                         const CatReadoutFaults& faults) {
    const std::size_t n = t.n_qubits();
    if (offset + c.n_qubits() > n) throw std::invalid_argument("cat circuit does not fit in the register");
    ProtocolTrace trace(register_labels(c, n, offset));
    for (int r = 1; r <= rounds; ++r) {
        for (std::size_t k = 0; k < c.ancillas.size(); ++k) {
            std::size_t a = offset + c.ancillas[k];
            std::size_t left = offset + c.cat_qubits[k];
            std::size_t right = offset + c.cat_qubits[(k + 1) % c.n];
            t.cnot(left, a);
            t.cnot(right, a);
            auto rec = t.measure_pauli(single_op(n, a, 'Z'));
            if (rec.outcome < 0) t.apply_pauli(single_op(n, a, 'X'));
            PauliString zz(n);
            zz.set(left, 'Z');
            zz.set(right, 'Z');
            rec.op = zz;
            if (faults.count({r, k})) rec.outcome = -rec.outcome;
            trace.add({"zz" + std::to_string(r) + "_" + std::to_string(k), trace.pauli_text(zz), rec, std::nullopt});
        }
    }
    return trace;
}

std::string verdict_name(CatVerdict v) {
    switch (v) {
        case CatVerdict::Proper: return "proper";
        case CatVerdict::Imperfect: return "imperfect";
        case CatVerdict::Problematic: return "problematic";
    }
    return "?";
}

CatCheck check_cat(const ProtocolTrace& trace, const CatCircuit& c, std::size_t max_tolerated) {
    std::vector<int> minus(c.ancillas.size()), total(c.ancillas.size());
    for (const auto& s : trace.steps()) {
        if (s.op.rfind("zz", 0) != 0 || !s.record) continue;
        std::size_t k = std::stoul(s.op.substr(s.op.find('_') + 1));
        if (k >= total.size()) throw std::invalid_argument("trace does not belong to this cat circuit");
        ++total[k];
        if (s.record->outcome < 0) ++minus[k];
    }
    CatCheck out;
    for (std::size_t k = 0; k < total.size(); ++k) {
        if (2 * minus[k] > total[k]) out.flagged.push_back(k);
    }
    if (out.flagged.empty()) return out;
    if (c.topology == CatTopology::Loop && out.flagged.size() % 2 == 1) {
        // A closed ring always has an even number of domain walls; an odd count cannot be explained by flips.
        out.verdict = CatVerdict::Problematic;
        out.flip_weight = c.n;
        return out;
    }
    std::size_t flipped = 0;
    bool side = false;
    for (std::size_t j = 1; j < c.n; ++j) {
        if (std::find(out.flagged.begin(), out.flagged.end(), j - 1) != out.flagged.end()) side = !side;
        if (side) ++flipped;
    }
    out.flip_weight = std::min(flipped, c.n - flipped);
    out.verdict = out.flip_weight <= max_tolerated ? CatVerdict::Imperfect : CatVerdict::Problematic;
    return out;
}

int cat_parity(StabilizerTableau& t, const CatCircuit& c, std::size_t offset) {
    int parity = 1;
    for (auto q : c.cat_qubits) parity *= t.measure_pauli(single_op(t.n_qubits(), offset + q, 'X')).outcome;
    return parity;
}

std::string variant_name(SuperVariant v) { return v == SuperVariant::CornerShared ? "corner_shared" : "inner_augmented"; }

SuperVariant parse_variant(const std::string& s) {
    if (s == "corner_shared") return SuperVariant::CornerShared;
    if (s == "inner_augmented") return SuperVariant::InnerAugmented;
    throw std::invalid_argument("unknown variant '" + s + "' (expected corner_shared or inner_augmented)");
}

std::vector<ScheduleStep> superstabilizer_schedule(int d, SuperVariant variant) {
    if (d < 2) throw std::invalid_argument("distance must be at least 2");
    if (variant == SuperVariant::InnerAugmented && d < 8) {
        throw std::invalid_argument("inner_augmented needs distance 8 or more");
    }
    std::vector<ScheduleStep> s = {
        {"prep", "H on cat qubits"},
        {"prep", "CNOT cat to left ancilla"},
        {"prep", "CNOT cat to right ancilla"},
        {"prep", "measure ancillas"},
        {"prep", "conditional X"},
    };
    for (int r = 1; r < d; ++r) {
        auto round = "round " + std::to_string(r);
        s.push_back({"verify", round + ": CNOT left"});
        s.push_back({"verify", round + ": CNOT right"});
        s.push_back({"verify", round + ": measure ancillas"});
        s.push_back({"verify", round + ": reset ancillas"});
    }
    if (variant == SuperVariant::CornerShared) {
        s.push_back({"basis", "H on cat qubits (before propagation for Z, after it for X)"});
        s.push_back({"propagate", "CNOT to first data qubit"});
        s.push_back({"propagate", "CNOT to second data qubit at corners"});
        s.push_back({"measure", "measure cat qubits"});
    } else {
        s.push_back({"basis", "H on cat qubits (Z superstabilizer)"});
        s.push_back({"propagate", "CNOT to neighbouring data qubits"});
        s.push_back({"basis", "H on cat qubits (X superstabilizer)"});
        s.push_back({"measure", "measure cat qubits; first SWAP of inner cat qubits"});
        s.push_back({"propagate", "second SWAP of inner cat qubits"});
        s.push_back({"propagate", "CNOT for ranged pairs"});
        s.push_back({"basis", "H on inner cat qubits"});
        s.push_back({"measure", "measure inner cat qubits"});
    }
    return s;
}

StepCount step_count(int d, SuperVariant variant) {
    StepCount c;
    for (const auto& s : superstabilizer_schedule(d, variant)) {
        if (s.category == "prep") ++c.prep;
        else if (s.category == "verify") ++c.verify;
        else if (s.category == "propagate") ++c.propagate;
        else if (s.category == "basis") ++c.basis_change;
        else ++c.measure;
    }
    return c;
}

namespace {

// Data register indices of the superstabilizer in ring order, grouped per cat qubit.
std::vector<std::vector<std::size_t>> ring_assignment(const Layout& layout, const Stabilizer& st, SuperVariant v) {
    const auto& sup = st.support;
    double cr = 0, cc = 0;
    for (auto p : sup) {
        cr += p.r;
        cc += p.c;
    }
    cr /= static_cast<double>(sup.size());
    cc /= static_cast<double>(sup.size());
    auto angle = [&](double r, double c) { return std::atan2(r - cr, c - cc); };
    std::vector<Coord> ring(sup.begin(), sup.end());
    std::sort(ring.begin(), ring.end(), [&](Coord a, Coord b) { return angle(a.r, a.c) < angle(b.r, b.c); });
    const std::size_t m = ring.size();

    std::vector<bool> pair_start(m, false);
    if (v == SuperVariant::CornerShared) {
        if (m < 8) throw LayoutError("superstabilizer of weight " + std::to_string(m) + " is too small for a corner-shared ring");
        std::vector<bool> used(m, false);
        for (double target : {-0.75, -0.25, 0.25, 0.75}) {
            target *= std::numbers::pi;
            std::size_t best = m;
            double best_gap = 10;
            for (std::size_t i = 0; i < m; ++i) {
                std::size_t j = (i + 1) % m;
                if (used[i] || used[j]) continue;
                double a = angle((ring[i].r + ring[j].r) / 2.0, (ring[i].c + ring[j].c) / 2.0);
                double gap = std::abs(std::remainder(a - target, 2 * std::numbers::pi));
                if (gap < best_gap) {
                    best_gap = gap;
                    best = i;
                }
            }
            pair_start[best] = true;
            used[best] = used[(best + 1) % m] = true;
        }
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (pair_start[i]) {
            start = i;
            break;
        }
    }
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t step = 0; step < m; ++step) {
        std::size_t i = (start + step) % m;
        auto idx = static_cast<std::size_t>(layout.data_index(ring[i]));
        if (pair_start[i]) {
            out.push_back({idx, static_cast<std::size_t>(layout.data_index(ring[(i + 1) % m]))});
            ++step;
        } else {
            out.push_back({idx});
        }
    }
    if (out.size() < 2) throw LayoutError("superstabilizer is too small for a cat ring");
    return out;
}

}  // namespace

SuperMeasurement superstabilizer_measure(StabilizerTableau& t, const Layout& layout, std::size_t super, int d,
                                         SuperVariant variant, const ProtocolOptions& options) {
    if (super >= layout.stabilizers.size()) throw std::out_of_range("no stabilizer " + std::to_string(super));
    const auto& st = layout.stabilizers[super];
    if (!st.is_super) throw LayoutError("stabilizer " + std::to_string(super) + " is not a superstabilizer");
    const std::size_t n_data = layout.n_data();
    if (t.n_qubits() != n_data) throw DimensionError("state does not match the layout's data qubits");

    SuperMeasurement out;
    out.steps = step_count(d, variant);
    out.assignment = ring_assignment(layout, st, variant);
    out.cat = build_cat(out.assignment.size(), CatTopology::Loop);
    const auto& cat = out.cat;
    const auto op = layout.stabilizer_op(super);
    const bool deterministic = t.expectation(op) != Expectation::Indeterminate;

    std::vector<std::string> labels;
    for (auto q : layout.data_qubits()) labels.push_back("(" + std::to_string(q.r) + "," + std::to_string(q.c) + ")");
    for (const auto& l : cat.labels()) labels.push_back(l);
    out.trace = ProtocolTrace(labels);

    auto big = t.with_ancillas(cat.n_qubits());
    const std::size_t n = big.n_qubits();
    run_cat(big, cat, out.trace, n_data, options);
    auto check = verify_cat(big, cat, verification_rounds(d, CatTopology::Loop), n_data);
    for (const auto& s : check.steps()) out.trace.add(s);

    auto cat_q = [&](std::size_t k) { return n_data + cat.cat_qubits[k]; };
    if (st.kind == Kind::Z) {
        for (std::size_t k = 0; k < cat.n; ++k) big.h(cat_q(k));
    }
    for (std::size_t layer = 0; layer < 2; ++layer) {
        for (std::size_t k = 0; k < cat.n; ++k) {
            if (layer >= out.assignment[k].size()) continue;
            std::size_t dq = out.assignment[k][layer];
            if (st.kind == Kind::Z) big.cnot(dq, cat_q(k));
            else big.cnot(cat_q(k), dq);
        }
    }
    if (st.kind == Kind::X) {
        for (std::size_t k = 0; k < cat.n; ++k) big.h(cat_q(k));
    }

    auto forced = options.forced.find("super");
    int product = 1;
    for (std::size_t k = 0; k < cat.n; ++k) {
        std::optional<int> f;
        if (k + 1 == cat.n && forced != options.forced.end()) f = forced->second * product;
        auto rec = big.measure_pauli(single_op(n, cat_q(k), 'Z'), f);
        product *= rec.outcome;
        if (rec.outcome < 0) big.apply_pauli(single_op(n, cat_q(k), 'X'));
    }
    t = big.without_ancillas(cat.n_qubits());

    out.record.op = op;
    out.record.outcome = product;
    out.record.deterministic = deterministic;
    out.record.forced = forced != options.forced.end();
    out.trace.add({"super", out.trace.pauli_text(op), out.record, std::nullopt});
    return out;
}

std::vector<AlternationCycle> alternation_schedule(int d) {
    if (d < 2) throw std::invalid_argument("distance must be at least 2");
    const int per_kind = (d + 1) / 2;
    std::vector<AlternationCycle> out;
    for (int i = 0; i < 2 * per_kind; ++i) {
        AlternationCycle c;
        c.index = i;
        c.kind = i % 2 == 0 ? Kind::Z : Kind::X;
        std::string ring = c.kind == Kind::Z ? "z_ring" : "x_ring";
        c.resources = {ring};
        for (int k = 0; k < 4; ++k) c.resources.insert("crossing_" + std::to_string(k));
        out.push_back(c);
    }
    return out;
}

nlohmann::ordered_json cat_to_json(const CatCircuit& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["topology"] = topology_name(c.topology);
    j["n_qubits"] = c.n_qubits();
    j["cat_qubits"] = c.cat_qubits;
    j["ancillas"] = c.ancillas;
    j["layers"] = nlohmann::ordered_json::array();
    for (const auto& layer : c.layers) {
        auto l = nlohmann::ordered_json::array();
        for (const auto& g : layer) {
            nlohmann::ordered_json gj;
            gj["gate"] = g.gate;
            gj["qubits"] = g.qubits;
            if (!g.condition.empty()) gj["condition"] = g.condition;
            l.push_back(gj);
        }
        j["layers"].push_back(l);
    }
    return j;
}

nlohmann::ordered_json schedule_to_json(int d, SuperVariant variant) {
    nlohmann::ordered_json j;
    j["d"] = d;
    j["variant"] = variant_name(variant);
    j["steps"] = nlohmann::ordered_json::array();
    auto steps = superstabilizer_schedule(d, variant);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        j["steps"].push_back({{"step", i + 1}, {"category", steps[i].category}, {"action", steps[i].action}});
    }
    auto c = step_count(d, variant);
    j["counts"] = {{"prep", c.prep},   {"verify", c.verify},   {"propagate", c.propagate},
                   {"basis", c.basis_change}, {"measure", c.measure}, {"total", c.total()}};
    return j;
}

std::string step_table_csv(int d_min, int d_max) {
    std::ostringstream out;
    out << "d,variant,prep,verify,propagate,basis,measure,total\n";
    for (int d = d_min; d <= d_max; ++d) {
        for (auto v : {SuperVariant::CornerShared, SuperVariant::InnerAugmented}) {
            if (v == SuperVariant::InnerAugmented && d < 8) continue;
            auto c = step_count(d, v);
            out << d << ',' << variant_name(v) << ',' << c.prep << ',' << c.verify << ',' << c.propagate << ','
                << c.basis_change << ',' << c.measure << ',' << c.total() << '\n';
        }
    }
    return out.str();
}

}  // namespace dsc
