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

// Reference layouts. Each one is built from the constructors in lattice.h; the JSON
// files under fixtures/ are these layouts written out by `dsc_fixtures`.

#ifndef DSC_FIXTURES_H
#define DSC_FIXTURES_H

#include <map>
#include <string>
#include <vector>

#include "dsc/lattice.h"

namespace dsc {

struct Fixture {
    std::string name;
    std::string description;
    Layout layout;
    std::map<std::string, Coord> marks;
};

/// fig1, fig2, fig4a, fig4b, fig7, fig8, fig9.
std::vector<std::string> fixture_names();
Fixture make_fixture(const std::string& name);

}  // namespace dsc

#endif
