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

// Writes the built-in layouts as JSON files and the golden CLI outputs used by the tests.
//
//   dsc_fixtures <fixture_dir> [<golden_dir>]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli.h"
#include "dsc/fixtures.h"
#include "dsc/layout_io.h"
#include "golden_cases.h"

int main(int argc, char** argv) {
    if (argc < 2 || argc > 3) {
        std::cerr << "usage: dsc_fixtures <fixture_dir> [<golden_dir>]\n";
        return 2;
    }
    std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    for (const auto& name : dsc::fixture_names()) {
        dsc::save_layout(dsc::make_fixture(name).layout, (dir / (name + ".json")).string());
        std::cout << "wrote " << (dir / (name + ".json")).string() << '\n';
    }
    if (argc < 3) return 0;

    std::filesystem::path golden = argv[2];
    std::filesystem::create_directories(golden);
    for (const auto& g : dsc::cli::golden_cases()) {
        std::ostringstream out, err;
        int code = dsc::cli::run(g.args, out, err);
        if (code != dsc::cli::kExitOk) {
            std::cerr << g.name << ": exit " << code << ": " << err.str();
            return 1;
        }
        std::ofstream f(golden / (g.name + ".txt"), std::ios::binary);
        f << out.str();
        std::cout << "wrote " << (golden / (g.name + ".txt")).string() << '\n';
    }
    return 0;
}
