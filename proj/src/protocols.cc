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

#include "dsc/protocols.h"

#include <algorithm>

namespace dsc {

namespace {

std::optional<int> forced_for(const ProtocolOptions& o, const std::string& label) {
    auto it = o.forced.find(label);
    if (it == o.forced.end()) return std::nullopt;
    return it->second;
}

// Measures `op`; on -1 applies `fix` (when given) and records it as the step's correction.
MeasurementRecord measure_step(StabilizerTableau& t, ProtocolTrace& trace, const std::string& label,
                               const PauliString& op, const ProtocolOptions& o,
                               const std::optional<PauliString>& fix = std::nullopt) {
    auto rec = t.measure_pauli(op, forced_for(o, label));
    TraceStep step{label, trace.pauli_text(op), rec, std::nullopt};
    if (rec.outcome < 0 && fix) {
        t.apply_pauli(*fix);
        step.correction = *fix;
    }
    trace.add(std::move(step));
    return rec;
}

void gate_step(StabilizerTableau& t, ProtocolTrace& trace, Gate g, std::initializer_list<std::size_t> qs) {
    static const char* kNames[] = {"H", "S", "X", "Y", "Z", "CNOT", "SWAP"};
    t.apply_clifford(g, qs);
    std::string target;
    for (auto q : qs) {
        if (!target.empty()) target += ' ';
        target += trace.labels().at(q);
    }
    trace.add({kNames[static_cast<int>(g)], target, std::nullopt, std::nullopt});
}

std::vector<std::string> fragment_labels() {
    std::vector<std::string> out;
    for (int i = 1; i <= 9; ++i) out.push_back(std::to_string(i));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Injection.

PauliString fragment_op(char pauli, std::initializer_list<std::size_t> labels) {
    PauliString p(9);
    for (auto q : labels) {
        if (q < 1 || q > 9) throw std::out_of_range("fragment qubits are labelled 1..9");
        p.set(q - 1, pauli);
    }
    return p;
}

std::vector<PauliString> injection_fragment() {
    return {
        fragment_op('X', {1, 2, 3, 5}), fragment_op('X', {5, 7, 8, 9}), fragment_op('Z', {2, 4, 5, 7}),
        fragment_op('Z', {3, 5, 6, 8}), fragment_op('Z', {1, 2}),       fragment_op('Z', {2, 3}),
        fragment_op('Z', {7, 8}),       fragment_op('Z', {8, 9}),       fragment_op('Z', {4}),
    };
}

Preparation clifford_preparation(CliffordState s) {
    return [s](StabilizerTableau& t, std::size_t q, ProtocolTrace& trace) {
        switch (s) {
            case CliffordState::Zero: gate_step(t, trace, Gate::H, {q}); break;
            case CliffordState::One:
                gate_step(t, trace, Gate::H, {q});
                gate_step(t, trace, Gate::X, {q});
                break;
            case CliffordState::Plus: break;
            case CliffordState::Minus: gate_step(t, trace, Gate::Z, {q}); break;
            case CliffordState::PlusI: gate_step(t, trace, Gate::S, {q}); break;
            case CliffordState::MinusI:
                gate_step(t, trace, Gate::S, {q});
                gate_step(t, trace, Gate::Z, {q});
                break;
        }
    };
}

InjectionResult inject_defect_qubit(CliffordState s, const ProtocolOptions& options) {
    return inject_defect_qubit(clifford_preparation(s), options);
}

InjectionResult inject_defect_qubit(const Preparation& prep, const ProtocolOptions& options) {
    auto gens = injection_fragment();
    InjectionResult r{StabilizerTableau::from_generators(gens, options.seed), {}, ProtocolTrace(fragment_labels())};
    bool alt = options.alternative_corrections;

    // Disentangle qubit 5; on -1 restore X1X2X3 and X7X8X9 to +1.
    measure_step(r.state, r.trace, "mx5", fragment_op('X', {5}), options,
                 alt ? fragment_op('Z', {3, 5, 6, 8}) : fragment_op('Z', {2, 4, 5, 7}));

    prep(r.state, 4, r.trace);

    // The two outcomes agree; the shared correction follows the second.
    measure_step(r.state, r.trace, "mz2457", fragment_op('Z', {2, 4, 5, 7}), options, PauliString(9));
    measure_step(r.state, r.trace, "mz3568", fragment_op('Z', {3, 5, 6, 8}), options,
                 alt ? fragment_op('X', {7, 8, 9}) : fragment_op('X', {1, 2, 3}));

    r.frame.qubits.push_back({"L", fragment_op('Z', {5}), fragment_op('X', {1, 2, 3, 5})});
    return r;
}

InjectionResult convert_to_deformation(InjectionResult in, const ProtocolOptions& options) {
    bool alt = options.alternative_corrections;
    // Merges the two defects into the superstabilizer Z2Z3Z4Z6Z7Z8.
    measure_step(in.state, in.trace, "mx5_merge", fragment_op('X', {5}), options,
                 alt ? fragment_op('Z', {3, 5, 6, 8}) : fragment_op('Z', {2, 4, 5, 7}));
    auto& q = in.frame.at("L");
    q.z = fragment_op('Z', {2, 4, 7});
    q.x = fragment_op('X', {1, 2, 3});
    return in;
}

// ---------------------------------------------------------------------------------------------
// Lattice surgery.

namespace {

constexpr int kR0 = 6;  // centre of the intermediate qubit
constexpr int kC0 = 7;

// Named qubits relative to the intermediate qubit's centre.
const std::vector<std::pair<std::string, Coord>>& named_offsets() {
    static const std::vector<std::pair<std::string, Coord>> kNamed = {
        {"1", {-2, 0}}, {"2", {-1, -1}}, {"3", {-1, 1}}, {"4", {0, -2}}, {"5", {1, -1}},  {"6", {1, 1}},
        {"7", {2, 0}},  {"8", {-2, 2}},  {"9", {2, 2}},  {"S", {0, 2}},  {"a", {-2, 4}},  {"b", {-1, 3}},
        {"c", {-1, 5}}, {"d", {0, 6}},   {"e", {1, 3}},  {"f", {1, 5}},  {"g", {2, 4}},   {"i", {3, -1}},
        {"ii", {3, 1}}, {"10", {3, 3}},
    };
    return kNamed;
}

std::string coord_label(Coord p) { return "(" + std::to_string(p.r) + "," + std::to_string(p.c) + ")"; }

std::string rel(int dr, int dc) { return coord_label({kR0 + dr, kC0 + dc}); }

PauliString widen(const PauliString& p, std::size_t n) {
    PauliString out(n);
    for (auto q : p.support()) out.set(q, p.x(q), p.z(q));
    out.set_log_i(p.log_i());
    return out;
}

}  // namespace

std::string merge_mode_name(MergeMode m) { return m == MergeMode::Sequential ? "sequential" : "parallel"; }

MergeMode parse_merge_mode(const std::string& s) {
    if (s == "sequential") return MergeMode::Sequential;
    if (s == "parallel") return MergeMode::Parallel;
    throw std::invalid_argument("unknown merge mode '" + s + "' (expected sequential or parallel)");
}

PauliString SurgeryLayout::op(char pauli, const std::vector<std::string>& names) const {
    PauliString p(n_qubits());
    for (const auto& name : names) {
        auto it = index.find(name);
        if (it == index.end()) throw std::invalid_argument("no qubit named '" + name + "'");
        p.set(it->second, pauli);
    }
    return p;
}

LogicalFrame SurgeryLayout::initial_frame() const {
    LogicalFrame f;
    f.qubits.push_back({"C", op('Z', {"i", "7", "ii"}), op('X', {"i", rel(4, -2), rel(5, -1)})});
    f.qubits.push_back({"I", op('Z', {"5", "6", "7"}), op('X', {"2", "4", "5"})});
    f.qubits.push_back({"T", op('Z', {"e", "f", "g"}), op('X', {"c", "d", "f"})});
    return f;
}

SurgeryLayout make_surgery_layout() {
    SurgeryLayout s;
    s.layout = build_lattice(19, 17);
    make_deformation_qubit(s.layout, {kR0, kC0}, 3, Shape::FourFin, 1, "I");
    make_deformation_qubit(s.layout, {kR0, kC0 + 4}, 3, Shape::FourFin, 1, "T");
    make_deformation_qubit(s.layout, {kR0 + 4, kC0}, 3, Shape::FourFin, 1, "C");
    std::map<Coord, std::string> names;
    for (const auto& [name, d] : named_offsets()) names[{kR0 + d.r, kC0 + d.c}] = name;
    for (auto q : s.layout.data_qubits()) {
        auto it = names.find(q);
        std::string label = it != names.end() ? it->second : coord_label(q);
        s.index[label] = s.labels.size();
        // Named qubits also answer to their coordinates.
        if (it != names.end()) s.index[coord_label(q)] = s.labels.size();
        s.labels.push_back(label);
    }
    s.parking = s.labels.size();
    s.index["p7"] = s.parking;
    s.labels.push_back("p7");
    return s;
}

StabilizerTableau prepare_surgery(const SurgeryLayout& s, const std::vector<PauliString>& logical_gens,
                                  std::uint64_t seed) {
    std::vector<PauliString> gens;
    for (std::size_t i = 0; i < s.layout.stabilizers.size(); ++i) {
        gens.push_back(widen(s.layout.stabilizer_op(i), s.n_qubits()));
    }
    gens.push_back(s.op('Z', {"p7"}));
    auto frame = s.initial_frame();
    for (const auto& g : logical_gens) gens.push_back(logical_operator(frame, g));
    return StabilizerTableau::from_generators(gens, seed);
}

int surgery_zz(StabilizerTableau& t, const SurgeryLayout& s, int rounds, ProtocolTrace& trace,
               const ProtocolOptions& options, const ZZFaults& faults) {
    if (rounds < 1 || rounds % 2 == 0) {
        throw std::invalid_argument("majority voting needs an odd number of rounds, got " + std::to_string(rounds));
    }
    const std::size_t q7 = s.index.at("7");
    const auto zz = s.op('Z', {"5", "6", "i", "ii"});

    // Plain Z stabilizers next to the measured operator keep running; the two Z superstabilizers
    // that include qubit 7 are suspended.
    std::vector<PauliString> neighbours;
    for (std::size_t i = 0; i < s.layout.stabilizers.size(); ++i) {
        const auto& st = s.layout.stabilizers[i];
        if (st.kind != Kind::Z || st.is_super) continue;
        auto p = widen(s.layout.stabilizer_op(i), s.n_qubits());
        for (auto q : p.support()) {
            if (zz.z(q)) {
                neighbours.push_back(p);
                break;
            }
        }
    }

    gate_step(t, trace, Gate::SWAP, {q7, s.parking});
    int sum = 0;
    bool saw_minus = false;
    for (int r = 1; r <= rounds; ++r) {
        if (auto it = faults.errors.find(r); it != faults.errors.end()) {
            PauliString e(s.n_qubits());
            for (const auto& [name, pauli] : it->second) e.set(name == "7" ? s.parking : s.index.at(name), pauli);
            t.apply_pauli(e);
            trace.add({"error", trace.pauli_text(e), std::nullopt, std::nullopt});
        }
        auto label = "zz" + std::to_string(r);
        auto rec = t.measure_pauli(zz, forced_for(options, label));
        if (faults.flipped_rounds.count(r)) rec.outcome = -rec.outcome;
        sum += rec.outcome;
        saw_minus |= rec.outcome < 0;
        trace.add({label, trace.pauli_text(zz), rec, std::nullopt});
        for (const auto& p : neighbours) measure_step(t, trace, "zstab", p, options);
    }
    gate_step(t, trace, Gate::SWAP, {q7, s.parking});

    int vote = sum > 0 ? +1 : -1;
    TraceStep step{"zz_vote", trace.pauli_text(zz), MeasurementRecord{zz, vote, false, false}, std::nullopt};
    if (vote < 0) {
        auto x_i = s.initial_frame().at("I").x;
        t.apply_pauli(x_i);
        step.correction = x_i;
    } else if (saw_minus) {
        step.correction = PauliString(s.n_qubits());
    }
    trace.add(std::move(step));
    return vote;
}

LogicalFrame surgery_merge(StabilizerTableau& t, const SurgeryLayout& s, MergeMode mode, ProtocolTrace& trace,
                           const ProtocolOptions& options) {
    bool alt = options.alternative_corrections;

    // Cut the shared X-boundary qubit so the two X superstabilizers only survive as a product.
    measure_step(t, trace, "mzS", s.op('Z', {"S"}), options,
                 alt ? s.op('X', {"b", "c", "d", "e", "f", "S"}) : s.op('X', {"2", "3", "4", "5", "6", "S"}));

    struct Cut {
        std::string label;
        PauliString op;
        PauliString fix;
    };
    auto z_c = s.op('Z', {"i", "7", "ii"});
    std::vector<Cut> cuts = {
        {"mx3", s.op('X', {"3"}), alt ? s.op('Z', {"1", "2", "3", "5", "6", "7"}) : s.op('Z', {"3", "8", "b"})},
        {"mxb", s.op('X', {"b"}),
         alt ? s.op('Z', {"a", "b", "c", "e", "f", "g"}) : s.op('Z', {"1", "2", "5", "6", "7", "8", "b"})},
        {"mx6", s.op('X', {"6"}),
         alt ? s.op('Z', {"6", "9", "e"}) : s.op('Z', {"1", "2", "5", "6", "7", "8", "a", "c", "e", "f", "g"})},
        // The last cut decides X_I X_T; its -1 branch needs Z_I and Z_C together.
        {"mxe", s.op('X', {"e"}), s.op('Z', {"5", "7", "9"}) * z_c},
    };

    if (mode == MergeMode::Sequential) {
        for (const auto& c : cuts) measure_step(t, trace, c.label, c.op, options, c.fix);
    } else {
        std::vector<int> raw;
        for (const auto& c : cuts) raw.push_back(measure_step(t, trace, c.label, c.op, options).outcome);
        // Replay the sequential corrections classically: a correction applied early would have flipped
        // every later cut it anticommutes with.
        PauliString chain(s.n_qubits());
        std::vector<const Cut*> applied;
        bool any_minus = false;
        for (std::size_t j = 0; j < cuts.size(); ++j) {
            int o = raw[j];
            any_minus |= o < 0;
            for (auto* a : applied) {
                if (!commutes(a->fix, cuts[j].op)) o = -o;
            }
            if (o < 0) {
                chain *= cuts[j].fix;
                applied.push_back(&cuts[j]);
            }
        }
        t.apply_pauli(chain);
        std::optional<PauliString> corr;
        if (any_minus) corr = chain;
        trace.add({"chain", "X3 Xb X6 Xe", std::nullopt, corr});
    }

    LogicalFrame f;
    f.qubits.push_back(s.initial_frame().at("C"));
    f.qubits.push_back({"m", s.op('Z', {"5", "7", "9", "f", "g"}), s.op('X', {"2", "4", "5"})});
    return f;
}

CnotResult cnot(const std::vector<PauliString>& input_gens, MergeMode mode, const ProtocolOptions& options,
                int rounds) {
    static const SurgeryLayout kLayout = make_surgery_layout();
    std::vector<PauliString> gens;
    for (const auto& g : input_gens) {
        if (g.n_qubits() != 2) throw DimensionError("cnot inputs are two-qubit logical operators over (C, T)");
        PauliString p(3);
        p.set(0, g.x(0), g.z(0));
        p.set(2, g.x(1), g.z(1));
        p.set_log_i(g.log_i());
        gens.push_back(p);
    }
    gens.push_back(PauliString::parse("_X_"));
    CnotResult r{prepare_surgery(kLayout, gens, options.seed), {}, ProtocolTrace(kLayout.labels)};
    surgery_zz(r.state, kLayout, rounds, r.trace, options);
    r.frame = surgery_merge(r.state, kLayout, mode, r.trace, options);
    return r;
}

CnotResult cnot(CliffordState control, CliffordState target, MergeMode mode, const ProtocolOptions& options,
                int rounds) {
    std::vector<PauliString> gens = {
        state_stabilizer(control, PauliString::parse("X_"), PauliString::parse("Z_")),
        state_stabilizer(target, PauliString::parse("_X"), PauliString::parse("_Z")),
    };
    return cnot(gens, mode, options, rounds);
}

std::vector<CnotSweepEntry> cnot_sweep(MergeMode mode, std::uint64_t seed) {
    const auto& states = all_clifford_states();
    const int n = static_cast<int>(states.size());
    std::vector<CnotSweepEntry> out(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n * n; ++k) {
        auto c = states[static_cast<std::size_t>(k / n)];
        auto t = states[static_cast<std::size_t>(k % n)];
        ProtocolOptions o;
        o.seed = seed + static_cast<std::uint64_t>(k);
        auto r = cnot(c, t, mode, o);
        out[static_cast<std::size_t>(k)] = {c, t, logical_state(r.state, r.frame)};
    }
    return out;
}

}  // namespace dsc
