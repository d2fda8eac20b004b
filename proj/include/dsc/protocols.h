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

// Measurement protocols on stabilizer states: state injection by converting a two-defect
// qubit into a deformation qubit, and a CNOT built from lattice-surgery style merges.
//
// Every protocol records what it did in a ProtocolTrace. Measurements are labelled so callers
// can force outcomes by label, which is how the -1 branches are exercised deterministically.

#ifndef DSC_PROTOCOLS_H
#define DSC_PROTOCOLS_H

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsc/lattice.h"
#include "dsc/pauli.h"
#include "dsc/tableau.h"

namespace dsc {

/// The six single-qubit stabilizer states.
enum class CliffordState { Zero, One, Plus, Minus, PlusI, MinusI };

/// "0", "1", "+", "-", "+i", "-i".
std::string state_name(CliffordState s);
CliffordState parse_state(const std::string& s);
const std::vector<CliffordState>& all_clifford_states();

/// The Pauli stabilizing `s` given logical representatives: +-Z, +-X or +-Y with Y = iXZ.
PauliString state_stabilizer(CliffordState s, const PauliString& x, const PauliString& z);

struct TraceStep {
    std::string op;                             // measurement label, gate name or "correct"
    std::string target;                         // operator or gate operands in qubit labels
    std::optional<MeasurementRecord> record;    // absent for gates and pure corrections
    std::optional<PauliString> correction;      // the identity marks an explicit no-op
};

class ProtocolTrace {
   public:
    ProtocolTrace() = default;
    explicit ProtocolTrace(std::vector<std::string> labels) : labels_(std::move(labels)) {}

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<TraceStep>& steps() const { return steps_; }
    std::vector<TraceStep>& steps() { return steps_; }

    /// Sparse text form such as "-Z3 Z8 Zb".
    std::string pauli_text(const PauliString& p) const;

    void add(TraceStep step) { steps_.push_back(std::move(step)); }
    /// First step with this op label; throws std::out_of_range if there is none.
    const TraceStep& find(const std::string& op) const;

    nlohmann::ordered_json step_json(std::size_t i) const;
    /// One JSON object per line: {step, op, operator, outcome, deterministic, correction}.
    std::string jsonl() const;

   private:
    std::vector<std::string> labels_;
    std::vector<TraceStep> steps_;
};

struct LogicalQubit {
    std::string name;
    PauliString z;
    PauliString x;
};

/// Current representatives of each logical qubit's Z and X.
struct LogicalFrame {
    std::vector<LogicalQubit> qubits;
    const LogicalQubit& at(const std::string& name) const;
    LogicalQubit& at(const std::string& name);
};

/// Expectation of a logical Pauli written over the frame, e.g. "XZ" for X on qubit 0, Z on qubit 1.
Expectation logical_expectation(const StabilizerTableau& t, const LogicalFrame& frame, const PauliString& logical);

/// Maps a logical Pauli over the frame's qubits to a physical operator (phase included).
PauliString logical_operator(const LogicalFrame& frame, const PauliString& logical);

struct ProtocolOptions {
    std::map<std::string, int> forced;        // outcome per measurement label
    bool alternative_corrections = false;     // use the second of each pair of equivalent corrections
    std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------------------------
// Injection on a 3x3 fragment. Qubits are labelled 1..9 as in the fragment drawing and stored at
// register index label - 1. Stabilizers that never change during the protocol pin the remaining
// degrees of freedom so the fragment is a pure state.

struct InjectionResult {
    StabilizerTableau state;
    LogicalFrame frame;
    ProtocolTrace trace;
};

/// Rotates qubit `q`, which holds |+>, to the state being injected.
using Preparation = std::function<void(StabilizerTableau& t, std::size_t q, ProtocolTrace& trace)>;
Preparation clifford_preparation(CliffordState s);

/// The fragment in normal operation: its four stabilizers followed by the fixed ones.
std::vector<PauliString> injection_fragment();
/// Builds a fragment operator from 1-based qubit labels, e.g. fragment_op('Z', {2, 4, 5, 7}).
PauliString fragment_op(char pauli, std::initializer_list<std::size_t> labels);

InjectionResult inject_defect_qubit(CliffordState s, const ProtocolOptions& options = {});
InjectionResult inject_defect_qubit(const Preparation& prep, const ProtocolOptions& options = {});
InjectionResult convert_to_deformation(InjectionResult in, const ProtocolOptions& options = {});

// ---------------------------------------------------------------------------------------------
// CNOT by lattice surgery. Three distance-3 qubits: the intermediate I, the target T to its right
// sharing the X-boundary qubit S, and the control C below sharing the Z-boundary qubit 7.

struct SurgeryLayout {
    Layout layout;
    std::map<std::string, std::size_t> index;  // named qubit -> register index
    std::vector<std::string> labels;           // register index -> name
    std::size_t parking = 0;                   // spare qubit that holds qubit 7 during the ZZ rounds

    std::size_t n_qubits() const { return labels.size(); }
    PauliString op(char pauli, const std::vector<std::string>& names) const;
    /// Z_C, X_C, Z_I, X_I, Z_T, X_T before any surgery.
    LogicalFrame initial_frame() const;
};

SurgeryLayout make_surgery_layout();

/// Lattice stabilizers, the parking qubit in |0>, and the given logical generators over (C, I, T).
StabilizerTableau prepare_surgery(const SurgeryLayout& s, const std::vector<PauliString>& logical_gens,
                                  std::uint64_t seed = 0);

struct ZZFaults {
    std::set<int> flipped_rounds;                              // 1-based rounds whose readout is wrong
    std::map<int, std::vector<std::pair<std::string, char>>> errors;  // Pauli errors before a round
};

/// Measures Z_C Z_I `rounds` times through Z5 Z6 Zi Zii with qubit 7 parked, majority-votes, and
/// applies X_I on -1. Returns the voted outcome. `rounds` must be odd.
int surgery_zz(StabilizerTableau& t, const SurgeryLayout& s, int rounds, ProtocolTrace& trace,
               const ProtocolOptions& options = {}, const ZZFaults& faults = {});

enum class MergeMode { Sequential, Parallel };
std::string merge_mode_name(MergeMode m);
MergeMode parse_merge_mode(const std::string& s);

/// Merges I and T. Returns the frame for C and the merged qubit m.
LogicalFrame surgery_merge(StabilizerTableau& t, const SurgeryLayout& s, MergeMode mode, ProtocolTrace& trace,
                           const ProtocolOptions& options = {});

struct CnotResult {
    StabilizerTableau state;
    LogicalFrame frame;  // qubits "C" and "m"
    ProtocolTrace trace;
};

/// CNOT from control C onto target T; the inputs are two-qubit logical generators over (C, T).
CnotResult cnot(const std::vector<PauliString>& input_gens, MergeMode mode = MergeMode::Sequential,
                const ProtocolOptions& options = {}, int rounds = 3);
CnotResult cnot(CliffordState control, CliffordState target, MergeMode mode = MergeMode::Sequential,
                const ProtocolOptions& options = {}, int rounds = 3);

struct CnotSweepEntry {
    CliffordState control;
    CliffordState target;
    std::vector<PauliString> output;  // logical_state over (C, m)
};

/// Runs the CNOT on all 36 pairs of single-qubit stabilizer states, independent runs in parallel.
std::vector<CnotSweepEntry> cnot_sweep(MergeMode mode = MergeMode::Sequential, std::uint64_t seed = 0);

/// Canonical generators of the logical state over the frame's qubits (two-qubit Paulis).
std::vector<PauliString> logical_state(const StabilizerTableau& t, const LogicalFrame& frame);

}  // namespace dsc

#endif
