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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dsc/cat.h"
#include "dsc/fixtures.h"
#include "dsc/lattice.h"
#include "dsc/protocols.h"
#include "dsc/resources.h"
#include "support/bruteforce.h"
#include "support/statevector.h"

using namespace dsc;

namespace {

struct Check {
    std::ostringstream why;
    bool ok = true;
    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) why << msg;
        ok = ok && cond;
    }
};

int sv_sign(double e) {
    if (std::abs(e - 1) < 1e-9) return 1;
    if (std::abs(e + 1) < 1e-9) return -1;
    return 0;
}

// Rank over GF(2) of the supports of `ops`.
std::size_t gf2_rank(const std::vector<PauliString>& ops, std::size_t n) {
    std::size_t nw = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& p : ops) {
        std::vector<std::uint64_t> r(nw, 0);
        for (auto q : p.support()) r[q / 64] |= std::uint64_t{1} << (q % 64);
        rows.push_back(r);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t w = col / 64;
        std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t piv = rank;
        while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r][w] & bit)) {
                for (std::size_t k = 0; k < nw; ++k) rows[r][k] ^= rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

void counting(Check& c) {
    auto l = make_fixture("fig1").layout;
    std::vector<PauliString> zs, xs;
    for (std::size_t i = 0; i < l.stabilizers.size(); ++i) {
        (l.stabilizers[i].kind == Kind::Z ? zs : xs).push_back(l.stabilizer_op(i));
    }
    auto rz = gf2_rank(zs, l.n_data());
    auto rx = gf2_rank(xs, l.n_data());
    c.expect(l.n_data() == 48, "data qubits " + std::to_string(l.n_data()));
    c.expect(rz == 19 && rx == 28, "independent Z/X " + std::to_string(rz) + "/" + std::to_string(rx));
    c.expect(logical_count(l) == 1, "logical count " + std::to_string(logical_count(l)));
    c.expect(static_cast<int>(l.n_data() - rz - rx) == logical_count(l), "k = n - s disagrees");
}

void distances(Check& c) {
    auto fig1 = make_fixture("fig1").layout;
    c.expect(code_distance(fig1, 0) == 3, "fig1 distance");
    c.expect(oracle::min_logical_weight(fig1, 0, Kind::X, 4) == 3 && oracle::min_logical_weight(fig1, 0, Kind::Z, 4) == 3,
             "fig1 brute-force distance");
    auto fig2 = make_fixture("fig2").layout;
    for (std::size_t q = 0; q < fig2.qubits.size(); ++q) c.expect(code_distance(fig2, q) == 5, "fig2 distance");
    c.expect(code_distance(make_fixture("fig4a").layout, 0) == 5, "bar distance");
    auto fig8 = make_fixture("fig8").layout;
    c.expect(min_combined_operator(fig8, {0, 1, 2, 3}) == 4, "fig8 combined operator");
}

// Replays an injection trace on a dense state using the recorded outcomes and corrections.
oracle::StateVector replay_fragment(const ProtocolTrace& trace, Check& c) {
    oracle::StateVector sv(9);
    for (const auto& g : injection_fragment()) sv.project(g, +1);
    for (const auto& s : trace.steps()) {
        if (s.record) {
            c.expect(sv.project(s.record->op, s.record->outcome) > 1e-9, s.op + " outcome has zero probability");
        } else {
            std::size_t q = std::stoul(s.target) - 1;
            if (s.op == "H") sv.h(q);
            else if (s.op == "S") sv.s(q);
            else sv.apply_pauli(fragment_op(s.op[0], {q + 1}));
        }
        if (s.correction) sv.apply_pauli(*s.correction);
    }
    return sv;
}

std::vector<PauliString> converted_target(CliffordState s) {
    std::vector<PauliString> gens = {
        fragment_op('X', {1, 2, 3, 7, 8, 9}), fragment_op('X', {5}), fragment_op('Z', {2, 3, 4, 6, 7, 8}),
        fragment_op('Z', {1, 2}),             fragment_op('Z', {2, 3}), fragment_op('Z', {7, 8}),
        fragment_op('Z', {8, 9}),             fragment_op('Z', {4}),
    };
    gens.push_back(state_stabilizer(s, fragment_op('X', {1, 2, 3}), fragment_op('Z', {2, 4, 7})));
    return gens;
}

void protocol_equivalence(Check& c) {
    PauliString x1(1), z1(1);
    x1.set(0, 'X');
    z1.set(0, 'Z');
    for (auto s : all_clifford_states()) {
        auto want = StabilizerTableau::from_generators(converted_target(s));
        std::vector<PauliString> one_gen = {state_stabilizer(s, x1, z1)};
        auto ideal = StabilizerTableau::from_generators(one_gen);
        for (int f : {+1, -1}) {
            for (bool alt : {false, true}) {
                ProtocolOptions o{{{"mx5", f}, {"mz2457", -f}, {"mx5_merge", f}}, alt, 5};
                auto inj = inject_defect_qubit(s, o);
                auto conv = convert_to_deformation(inj, o);
                std::string tag = state_name(s) + " f=" + std::to_string(f) + (alt ? " alt" : "");
                c.expect(states_equal(conv.state, want), "canonical group differs for " + tag);
                for (const auto* r : {&inj, &conv}) {
                    auto sv = replay_fragment(r->trace, c);
                    const auto& q = r->frame.at("L");
                    const std::pair<PauliString, PauliString> ops[] = {
                        {q.x, x1}, {q.z, z1}, {state_stabilizer(CliffordState::PlusI, q.x, q.z), state_stabilizer(CliffordState::PlusI, x1, z1)}};
                    for (const auto& [op, one] : ops) {
                        int want_sign = static_cast<int>(ideal.expectation(one));
                        c.expect(static_cast<int>(r->state.expectation(op)) == want_sign, "tableau logical " + tag);
                        c.expect(sv_sign(sv.expectation(op)) == want_sign, "state-vector logical " + tag);
                    }
                }
            }
        }
    }
}

std::vector<PauliString> ideal_cnot(CliffordState a, CliffordState b) {
    std::vector<PauliString> in = {state_stabilizer(a, PauliString::parse("X_"), PauliString::parse("Z_")),
                                   state_stabilizer(b, PauliString::parse("_X"), PauliString::parse("_Z"))};
    auto t = StabilizerTableau::from_generators(in);
    t.cnot(0, 1);
    return t.canonicalize();
}

void cnot_truth_table(Check& c) {
    auto seq = cnot_sweep(MergeMode::Sequential, 1);
    auto par = cnot_sweep(MergeMode::Parallel, 1);
    c.expect(seq.size() == 36 && par.size() == 36, "sweep size");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto want = ideal_cnot(seq[i].control, seq[i].target);
        std::string tag = state_name(seq[i].control) + "," + state_name(seq[i].target);
        c.expect(seq[i].output == want, "sequential mismatch at " + tag);
        c.expect(par[i].output == seq[i].output, "modes disagree at " + tag);
    }
    auto bell = ideal_cnot(CliffordState::Plus, CliffordState::Zero);
    c.expect(bell == std::vector<PauliString>{PauliString::parse("XX"), PauliString::parse("ZZ")}, "Bell pair");

    for (auto mode : {MergeMode::Sequential, MergeMode::Parallel}) {
        for (auto label : {"zz1", "mzS", "mx3", "mxb", "mx6", "mxe"}) {
            for (bool alt : {false, true}) {
                for (auto [a, b] : {std::pair{CliffordState::Plus, CliffordState::MinusI},
                                    std::pair{CliffordState::One, CliffordState::Plus}}) {
                    std::vector<std::vector<PauliString>> out;
                    for (int f : {+1, -1}) {
                        auto r = cnot(a, b, mode, ProtocolOptions{{{label, f}}, alt, 3}, 3);
                        out.push_back(logical_state(r.state, r.frame));
                    }
                    c.expect(out[0] == out[1] && out[0] == ideal_cnot(a, b),
                             std::string("forced branches of ") + label + " diverge");
                }
            }
        }
    }
}

void syndrome(Check& c) {
    auto f = make_fixture("fig2");
    const auto& l = f.layout;
    auto t = encode_layout(l, 2);
    inject_error(l, t, {{f.marks.at("shared"), 'X'}});
    auto flipped = extract_syndrome(l, t);
    c.expect(flipped.size() == 2, "flipped " + std::to_string(flipped.size()) + " stabilizers");
    for (auto i : flipped) {
        c.expect(l.stabilizers[i].kind == Kind::Z && l.stabilizers[i].is_super, "flipped a non-super or X check");
    }
    if (flipped.size() == 2) c.expect(l.stabilizers[flipped[0]].owner != l.stabilizers[flipped[1]].owner, "same owner");
    auto s = make_surgery_layout();
    auto zz = s.op('Z', {"5", "6", "i", "ii"});
    c.expect(commutes(zz, s.op('X', {"7"})), "X7 anticommutes with merged check");
    c.expect(commutes(zz, s.op('X', {"6", "9", "ii"})), "X6 X9 Xii anticommutes with merged check");
}

PauliString on(std::size_t n, std::vector<std::size_t> qs, char p) {
    PauliString out(n);
    for (auto q : qs) out.set(q, p);
    return out;
}

StabilizerTableau prepared(const CatCircuit& circuit, std::uint64_t seed) {
    auto t = StabilizerTableau::new_state(circuit.n_qubits(), Basis::Zeros, seed);
    ProtocolTrace trace(circuit.labels());
    run_cat(t, circuit, trace);
    return t;
}

void cat_suite(Check& c) {
    for (auto topo : {CatTopology::Linear, CatTopology::Loop}) {
        for (std::size_t n = 2; n <= 64; ++n) c.expect(build_cat(n, topo).depth() == 5, "depth at n=" + std::to_string(n));
    }
    for (std::size_t n = 2; n <= 6; ++n) {
        auto circuit = build_cat(n);
        auto t = prepared(circuit, n);
        oracle::StateVector sv(n);
        sv.h(0);
        for (std::size_t k = 1; k < n; ++k) sv.cnot(0, k);
        for (const auto& g : ghz_generators(n)) {
            PauliString w(circuit.n_qubits());
            for (std::size_t k = 0; k < n; ++k) w.set(circuit.cat_qubits[k], g.x(k), g.z(k));
            c.expect(t.expectation(w) == Expectation::Plus, "GHZ generator missing at n=" + std::to_string(n));
            c.expect(sv_sign(sv.expectation(g)) == 1, "oracle disagrees with GHZ generator");
        }
    }
    auto circuit = build_cat(8);
    for (int d = 3; d <= 9; ++d) {
        for (std::size_t wall = 1; wall < 8; ++wall) {
            auto t = prepared(circuit, static_cast<std::uint64_t>(d));
            std::vector<std::size_t> qs;
            for (std::size_t k = wall; k < 8; ++k) qs.push_back(circuit.cat_qubits[k]);
            t.apply_pauli(on(circuit.n_qubits(), qs, 'X'));
            auto check = check_cat(verify_cat(t, circuit, verification_rounds(d, CatTopology::Linear)), circuit);
            c.expect(check.flagged == std::vector<std::size_t>{wall - 1}, "domain wall not located");
            c.expect(check.verdict != CatVerdict::Proper, "domain wall missed");
        }
    }
    for (std::size_t n = 2; n <= 10; ++n) {
        auto cc = build_cat(n);
        auto base = prepared(cc, n);
        for (std::size_t i = 0; i < n; ++i) {
            auto t = base;
            t.apply_pauli(on(cc.n_qubits(), {cc.cat_qubits[i]}, 'Z'));
            c.expect(cat_parity(t, cc) == -1, "single Z does not flip parity");
            for (std::size_t j = i + 1; j < n; ++j) {
                auto u = base;
                u.apply_pauli(on(cc.n_qubits(), {cc.cat_qubits[i], cc.cat_qubits[j]}, 'Z'));
                c.expect(cat_parity(u, cc) == 1, "double Z does not restore parity");
            }
        }
    }
}

void step_counts(Check& c) {
    for (int d = 3; d <= 25; ++d) {
        c.expect(step_count(d, SuperVariant::CornerShared).total() == 4 * d + 5, "corner_shared at d=" + std::to_string(d));
        c.expect(static_cast<int>(superstabilizer_schedule(d, SuperVariant::CornerShared).size()) == 4 * d + 5,
                 "corner_shared schedule length");
        if (d >= 8) {
            c.expect(step_count(d, SuperVariant::InnerAugmented).total() == 4 * d + 9,
                     "inner_augmented at d=" + std::to_string(d));
            c.expect(static_cast<int>(superstabilizer_schedule(d, SuperVariant::InnerAugmented).size()) == 4 * d + 9,
                     "inner_augmented schedule length");
        }
    }
}

void resource_tables(Check& c) {
    for (int d = 1; d <= 40; ++d) {
        auto b = local_block(PlacementParams::from_shortened(d));
        c.expect(b.side == 3 * d + 8, "block side");
        c.expect(planar_baseline(d) == (4L * d - 2) * (4L * d - 2), "planar");
    }
    c.expect(local_block(PlacementParams::from_shortened(9)).total == 1225, "block count at 9");
    auto r = compare(15, 15, {Scheme::Abstract, Scheme::Thickness2, Scheme::Lengthened});
    c.expect(r.rows.size() == 3, "three formulas");
    c.expect(std::abs(r.rows[0].reduction_pct - 55.0) <= 2.0, "reduction at 15");
    c.expect(r.asymptotic_ratio == 25.0 / 64.0, "asymptotic ratio");
    c.expect(report_csv(r).find("15,abstract,1482.25,3364,55.94") != std::string::npos, "csv row");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"counting: fig1 has 48 data qubits, 19 + 28 independent checks, 1 logical qubit", counting},
        {"distances: fig1 3, fig2 5, bar 5, fig8 combined 4", distances},
        {"inject and convert match the target group and a dense oracle", protocol_equivalence},
        {"CNOT truth table, mode equivalence and forced branches", cnot_truth_table},
        {"shared-qubit syndrome and merged-check commutation", syndrome},
        {"cat depth, GHZ group, domain walls and parity law", cat_suite},
        {"superstabilizer step totals 4d+5 and 4d+9", step_counts},
        {"resource formulas and the reduction at d = 15", resource_tables},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (c.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " ("
                  << std::fixed << std::setprecision(2) << secs << " s)";
        if (!c.ok) std::cout << ": " << c.why.str();
        std::cout << '\n';
        failed += !c.ok;
    }
    return failed == 0 ? 0 : 1;
}
