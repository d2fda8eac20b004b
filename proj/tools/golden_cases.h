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

#ifndef DSC_TOOLS_GOLDEN_CASES_H
#define DSC_TOOLS_GOLDEN_CASES_H

#include <ostream>
#include <string>
#include <vector>

namespace dsc::cli {

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
};

inline void PrintTo(const GoldenCase& g, std::ostream* os) { *os << g.name; }

/// One or more command lines per subcommand whose output is frozen under tests/golden.
inline std::vector<GoldenCase> golden_cases() {
    return {
        {"inject_plus", {"inject", "--state", "plus", "--seed", "1"}},
        {"inject_zero_forced", {"inject", "--state", "zero", "--force", "mx5=-1", "--format", "csv"}},
        {"inject_minus_i_json", {"inject", "--state", "-i", "--seed", "3", "--format", "json"}},
        {"cnot_sweep", {"cnot", "--sweep", "--mode", "both", "--format", "csv", "--seed", "5"}},
        {"cnot_one_one", {"cnot", "--control", "1", "--target", "1"}},
        {"distance_fig1", {"distance", "--fixture", "fig1"}},
        {"distance_fig2_json", {"distance", "--fixture", "fig2", "--format", "json"}},
        {"check_fig8", {"check", "--fixture", "fig8", "--format", "csv"}},
        {"syndrome_fig2", {"syndrome", "--fixture", "fig2", "--error", "X:shared", "--format", "csv"}},
        {"schedule_d5", {"schedule", "--d", "5"}},
        {"schedule_table", {"schedule", "--d-min", "3", "--d-max", "25", "--format", "csv"}},
        {"schedule_cat8_loop", {"schedule", "--cat", "8", "--topology", "loop", "--format", "csv"}},
        {"resources_table", {"resources", "--dmin", "3", "--dmax", "25", "--format", "csv"}},
    };
}

}  // namespace dsc::cli

#endif
