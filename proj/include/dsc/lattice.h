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

// Surface-code layouts and deformation-based qubits.
//
// Grid convention: (r, c) with 0 <= r < height, 0 <= c < width. Data qubits sit
// where r + c is odd. Ancillas sit where r + c is even: Z plaquettes at (odd,
// odd), X vertices at (even, even). A stabilizer is an ancilla together with its
// in-bounds data neighbours, kept when it has at least two.
//
// A deformation-based qubit is a pair of crossed regions: a set of Z plaquettes
// and a set of X vertices. Data qubits shared by two cells of the same region are
// disabled, each region is merged into one superstabilizer, and the crossing
// region cuts the other's support into two halves. Logical operators are chains
// joining the halves.

#ifndef DSC_LATTICE_H
#define DSC_LATTICE_H

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsc/pauli.h"
#include "dsc/tableau.h"

namespace dsc {

struct LayoutError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Coord {
    int r = 0;
    int c = 0;
    auto operator<=>(const Coord&) const = default;
};

enum class Role { Data, AncillaX, AncillaZ, Disabled };
enum class Kind { X, Z };
enum class Shape { FourFin, Bar, Skew };

inline Kind other(Kind k) { return k == Kind::X ? Kind::Z : Kind::X; }
char kind_char(Kind k);
std::string role_name(Role r);
std::string shape_name(Shape s);
Role parse_role(const std::string& s);
Shape parse_shape(const std::string& s);

struct Stabilizer {
    Kind kind = Kind::Z;
    std::vector<Coord> support;       // sorted, enabled data qubits only
    bool is_super = false;
    std::vector<Coord> ancilla_plan;  // ancilla cells; more than one for a superstabilizer
    int owner = -1;                   // deformation qubit index for superstabilizers
};

/// Region sizes. For FourFin, `lz`/`lx` bound the arm extents from the centre;
/// for Bar, `lz` is the half-width of the two-row Z bar and `lx` the half-length of
/// the X bar; for Skew, `lz` counts staircase steps on each side.
struct RegionSpec {
    Shape shape = Shape::FourFin;
    int thickness = 1;
    int lz = 1;
    int lx = 1;
};

struct DeformationQubit {
    std::string name;
    Coord center;
    RegionSpec spec;
    std::vector<Coord> z_cells;
    std::vector<Coord> x_cells;
    std::vector<Coord> disabled;
    int z_super = -1;  // index into Layout::stabilizers
    int x_super = -1;
    std::vector<Coord> z_logical;  // Z chain joining the halves of the X superstabilizer
    std::vector<Coord> x_logical;  // X chain joining the halves of the Z superstabilizer
    int declared_distance = 0;     // recomputed after every layout change
    int target_distance = 0;       // distance requested at construction
};

class Layout {
   public:
    Layout() = default;
    Layout(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    bool in_bounds(Coord p) const { return p.r >= 0 && p.r < height_ && p.c >= 0 && p.c < width_; }
    Role role(Coord p) const;
    void set_role(Coord p, Role role);

    std::vector<Stabilizer> stabilizers;
    std::vector<DeformationQubit> qubits;

    /// Enabled data qubits in row-major order; PauliString index i is data_qubits()[i].
    const std::vector<Coord>& data_qubits() const { return data_; }
    std::size_t n_data() const { return data_.size(); }
    /// -1 when p is not an enabled data qubit.
    int data_index(Coord p) const;
    PauliString op(Kind kind, const std::vector<Coord>& support) const;
    PauliString stabilizer_op(std::size_t i) const { return op(stabilizers[i].kind, stabilizers[i].support); }
    PauliString logical(std::size_t qubit, Kind kind) const;

    /// Rebuilds the data index after roles change.
    void reindex();

   private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Role> roles_;
    std::vector<int> index_;
    std::vector<Coord> data_;
};

Layout build_lattice(int width, int height);

/// Creates a qubit from explicit regions. Throws LayoutError on overlap or out-of-bounds cells.
DeformationQubit& make_region_qubit(Layout& l, Coord center, const RegionSpec& spec, std::string name = "");
/// Picks region sizes so the computed distance equals `distance`. Throws LayoutError when the
/// distance cannot be reached for this shape and thickness at this position.
DeformationQubit& make_deformation_qubit(Layout& l, Coord center, int distance, Shape shape = Shape::FourFin,
                                         int thickness = 1, std::string name = "");

/// Z and X region cells for a spec; exposed for fixtures and tests.
std::pair<std::vector<Coord>, std::vector<Coord>> region_cells(Coord center, const RegionSpec& spec);

struct ChainDistance {
    int x = 0;  // shortest X chain joining the Z superstabilizer halves
    int z = 0;  // shortest Z chain joining the X superstabilizer halves
    int min() const { return x < z ? x : z; }
};

ChainDistance chain_distances(const Layout& l, std::size_t qubit);
int code_distance(const Layout& l, std::size_t qubit);
/// Minimum weight of an operator acting as the product of the listed qubits' X (or Z)
/// logicals, whichever type is lighter. Superstabilizer halves are the terminals; chains
/// may pair halves of different qubits.
int min_combined_operator(const Layout& l, const std::vector<std::size_t>& qs);
/// Per-type version of the above.
int min_combined_operator(const Layout& l, const std::vector<std::size_t>& qs, Kind chain);

/// Recomputes logical representatives and declared distances of every qubit.
void refresh_qubits(Layout& l);

/// Number of enabled data qubits minus independent stabilizers.
int logical_count(const Layout& l);

struct Violation {
    enum class Type { Loop, CombinedOperator, BoundaryProximity } type;
    std::vector<std::size_t> qubits;
    int witness = 0;  // combined or single-qubit distance; loop length for loops
    std::string message;
};
std::string violation_name(Violation::Type t);

/// Loops of same-kind superstabilizers sharing data qubits, clusters whose combined
/// operators are lighter than `target`, and qubits whose own distance fell below `target`.
/// Without `target`, each qubit's target_distance is used.
std::vector<Violation> placement_check(const Layout& l, std::optional<int> target = std::nullopt);

/// State with every stabilizer at +1 and every logical Z at +1.
StabilizerTableau encode_layout(const Layout& l, std::uint64_t seed = 0);
/// Applies `chain`; throws LayoutError when the chain acts on a disabled or non-data qubit.
void inject_error(const Layout& l, StabilizerTableau& t, const std::map<Coord, char>& chain);
/// Indices of stabilizers with expectation -1.
std::vector<std::size_t> extract_syndrome(const Layout& l, const StabilizerTableau& t);

}  // namespace dsc

#endif
