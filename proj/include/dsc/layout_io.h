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

#ifndef DSC_LAYOUT_IO_H
#define DSC_LAYOUT_IO_H

#include <string>

#include <json.hpp>

#include "dsc/lattice.h"

namespace dsc {

/// {width, height, roles: [[r,c,role]...], supers: [...], qubits: [...]}.
/// Only cells whose role differs from the default pattern are listed under "roles".
nlohmann::json layout_to_json(const Layout& l);

/// Rebuilds plain stabilizers from the roles, takes superstabilizers from the file and
/// recomputes logicals. Throws LayoutError when a recorded distance disagrees with the
/// computed one.
Layout layout_from_json(const nlohmann::json& j);

void save_layout(const Layout& l, const std::string& path);
Layout load_layout(const std::string& path);

}  // namespace dsc

#endif
