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

// Closed-form physical qubit counts for placing deformation-based qubits, and the planar-code
// baseline they are compared against. Lengths count data and ancilla qubits alike.

#ifndef DSC_RESOURCES_H
#define DSC_RESOURCES_H

#include <string>
#include <vector>

#include <json.hpp>

namespace dsc {

struct PlacementParams {
    int d_o = 3;  // original code distance
    int t = 2;    // thickness
    int n = 1;    // local blocks per side of the global grid

    /// Shortened distance d_o - t + 1.
    int d_s() const { return d_o - t + 1; }
    /// Throws std::invalid_argument unless every field and d_s are at least 1.
    void validate() const;
    static PlacementParams from_shortened(int d_s, int t = 2, int n = 1) { return {d_s + t - 1, t, n}; }
};

struct LocalBlock {
    long side = 0;       // 3(d_o + t) - 1
    long total = 0;      // side^2
    int logical = 4;
    double per_logical() const { return static_cast<double>(total) / logical; }
};
LocalBlock local_block(const PlacementParams& p);

struct GlobalGrid {
    long side = 0;       // (5 d_o + 3 t - 4) n + 2 d_o - 1
    long total = 0;
    long logical = 0;    // 4 n^2, intermediate qubits excluded
    double per_logical() const { return static_cast<double>(total) / static_cast<double>(logical); }
};
GlobalGrid global_grid(const PlacementParams& p);

/// ((5 d_o + 3 t - 4) / 2)^2, the per-logical count of the global grid for large n.
double global_per_logical_limit(int d_o, int t);

/// (4d - 2)^2 per logical qubit.
long planar_baseline(int d);

enum class Scheme { Abstract, Thickness2, Lengthened, LocalBlock };
std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& s);
const std::vector<Scheme>& all_schemes();

/// Per-logical count of a scheme as a function of its distance:
///   abstract     25/4 d^2 + 5 d + 1
///   thickness2   (5 d + 7)^2 / 4 with d = d_s
///   lengthened   (5 d + 12)^2 / 4 with d = d_e
///   local_block  (3 d + 8)^2 / 4 with d = d_s, t = 2
double per_logical(Scheme s, int d);

struct ResourceRow {
    int d = 0;
    Scheme scheme = Scheme::Abstract;
    double per_logical = 0;
    long planar = 0;
    double reduction_pct = 0;  // 100 (1 - per_logical / planar)
};

struct ResourceReport {
    std::vector<ResourceRow> rows;
    std::vector<std::string> notes;
    double asymptotic_ratio = 25.0 / 64.0;  // abstract vs planar as d grows
};

/// Rows ordered by d, then by the order of `schemes`. Throws std::invalid_argument on an empty range.
ResourceReport compare(int d_min, int d_max, const std::vector<Scheme>& schemes = all_schemes());

/// Columns: d, scheme, per_logical, planar, reduction_pct.
std::string report_csv(const ResourceReport& r);
nlohmann::ordered_json report_json(const ResourceReport& r);

/// A moved qubit keeps distance d for its neighbours when (I) + (II) + (III) >= 2d, lengths in
/// physical rows or columns.
bool routing_ok(int d, int i, int ii, int iii);

}  // namespace dsc

#endif
