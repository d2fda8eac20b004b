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

// Cat-state preparation in constant depth, ZZ verification rounds, and cat-state measurement of
// superstabilizers with step accounting.
//
// A cat circuit of length n interleaves cat qubits (even register positions) with parity
// ancillas (odd positions). A loop adds one more ancilla closing the ring.

#ifndef DSC_CAT_H
#define DSC_CAT_H

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dsc/lattice.h"
#include "dsc/protocols.h"
#include "dsc/tableau.h"

namespace dsc {

enum class CatTopology { Linear, Loop };
std::string topology_name(CatTopology t);
CatTopology parse_topology(const std::string& s);

struct CatGate {
    std::string gate;                    // "H", "CNOT", "M" (Z basis) or "X"
    std::vector<std::size_t> qubits;     // CNOT lists control then target
    std::vector<std::size_t> condition;  // apply only if the product of these ancilla outcomes is -1
};

struct CatCircuit {
    std::size_t n = 0;
    CatTopology topology = CatTopology::Linear;
    std::vector<std::size_t> cat_qubits;
    std::vector<std::size_t> ancillas;  // ancillas[k] sits between cat qubits k and k+1 (mod n)
    std::vector<std::vector<CatGate>> layers;

    std::size_t n_qubits() const { return cat_qubits.size() + ancillas.size(); }
    std::size_t depth() const { return layers.size(); }
    /// "c0", "a0", "c1", ... in register order.
    std::vector<std::string> labels() const;
};

/// Hadamard, two CNOT layers, ancilla measurement, conditional X. Throws std::invalid_argument for n < 2.
CatCircuit build_cat(std::size_t n, CatTopology topology = CatTopology::Linear);

/// Executes the preparation on register qubits `offset`..`offset + n_qubits - 1`, which must start in |0>.
/// Ancillas end in |0>. Measurements are labelled "prep_a<k>".
void run_cat(StabilizerTableau& t, const CatCircuit& c, ProtocolTrace& trace, std::size_t offset = 0,
             const ProtocolOptions& options = {});

/// Z_i Z_{i+1} on neighbouring cat qubits and X on all of them.
std::vector<PauliString> ghz_generators(std::size_t n);

/// Linear cats need d - 1 rounds, loops ceil(d / 2).
int verification_rounds(int d, CatTopology topology);

/// Readouts to report wrongly, as (1-based round, ancilla index).
using CatReadoutFaults = std::set<std::pair<int, std::size_t>>;

/// Measures Z Z of every neighbouring cat pair through its ancilla, `rounds` times. Labels are
/// "zz<round>_<k>"; each ancilla is reset after its readout.
ProtocolTrace verify_cat(StabilizerTableau& t, const CatCircuit& c, int rounds, std::size_t offset = 0,
                         const CatReadoutFaults& faults = {});

enum class CatVerdict { Proper, Imperfect, Problematic };
std::string verdict_name(CatVerdict v);

struct CatCheck {
    CatVerdict verdict = CatVerdict::Proper;
    std::vector<std::size_t> flagged;  // ancillas whose majority readout is -1
    std::size_t flip_weight = 0;       // fewest cat qubits whose X flip explains the flags
};

/// Reads a verify_cat trace. More than `max_tolerated` implied flips makes the cat problematic.
CatCheck check_cat(const ProtocolTrace& trace, const CatCircuit& c, std::size_t max_tolerated = 1);

/// Measures every cat qubit in the X basis and returns the product of the outcomes.
int cat_parity(StabilizerTableau& t, const CatCircuit& c, std::size_t offset = 0);

// ---------------------------------------------------------------------------------------------
// Superstabilizer measurement.

enum class SuperVariant { CornerShared, InnerAugmented };
std::string variant_name(SuperVariant v);
SuperVariant parse_variant(const std::string& s);

struct StepCount {
    int prep = 0;
    int verify = 0;
    int propagate = 0;  // includes the SWAP layer that brings ranged pairs together
    int basis_change = 0;
    int measure = 0;
    int total() const { return prep + verify + propagate + basis_change + measure; }
    bool operator==(const StepCount&) const = default;
};

struct ScheduleStep {
    std::string category;  // prep, verify, propagate, basis, measure
    std::string action;
};

/// The physical step list for one superstabilizer measurement at distance d.
std::vector<ScheduleStep> superstabilizer_schedule(int d, SuperVariant variant);
StepCount step_count(int d, SuperVariant variant);

struct SuperMeasurement {
    MeasurementRecord record;
    StepCount steps;
    CatCircuit cat;
    std::vector<std::vector<std::size_t>> assignment;  // data register indices handled by each cat qubit
    ProtocolTrace trace;
};

/// Measures layout stabilizer `super` on t (a state over the layout's data qubits) with a loop cat.
/// The cat outcome product is labelled "super" and can be forced. Throws LayoutError when the
/// stabilizer is not a superstabilizer or too small for the ring, std::invalid_argument when
/// inner_augmented is asked for below distance 8.
SuperMeasurement superstabilizer_measure(StabilizerTableau& t, const Layout& layout, std::size_t super, int d,
                                         SuperVariant variant, const ProtocolOptions& options = {});

struct AlternationCycle {
    int index = 0;
    Kind kind = Kind::Z;
    std::set<std::string> resources;
};

/// Z and X cat verification cycles interleaved on the shared crossing ancillas.
std::vector<AlternationCycle> alternation_schedule(int d);

nlohmann::ordered_json cat_to_json(const CatCircuit& c);
nlohmann::ordered_json schedule_to_json(int d, SuperVariant variant);
/// Columns: d, variant, prep, verify, propagate, basis, measure, total.
std::string step_table_csv(int d_min, int d_max);

}  // namespace dsc

#endif
