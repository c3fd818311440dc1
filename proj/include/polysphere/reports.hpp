// Copyright 2026 The Polysphere Authors.
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

#pragma once

#include "json.hpp"

#include "polysphere/edge_solver.hpp"
#include "polysphere/fabrication.hpp"
#include "polysphere/solid_catalog.hpp"

namespace polysphere {

// JSON report shapes shared by the CLI and downstream tooling. Key names
// are part of the file format; add keys, never rename them.

/// {name, family, inventory, faces, edges, vertices, euler, and when known
/// circumradius_coeff / volume_coeff / surface_coeff / circumsphere_volume_ratio
/// / roundness_note}.
nlohmann::json to_json(const SolidRecord& record);

/// side and side_sq at full precision, side_rounded (1 decimal) and
/// side_sq_rounded (integer) for display, coverage keyed by side count.
nlohmann::json to_json(const EdgeSolution& solution);

/// {sphere: {radius}, solid, surface_match, inscribed_fit, side_ratio,
/// flat_deficit}.
nlohmann::json to_json(const MethodComparison& comparison);

nlohmann::json to_json(const SeamReport& report);

double round_to(double value, int decimals);

}  // namespace polysphere
