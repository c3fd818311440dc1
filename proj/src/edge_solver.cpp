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

#include "polysphere/edge_solver.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "polysphere/errors.hpp"
#include "polysphere/polygon_metrics.hpp"

namespace polysphere {

void validate(const SphereSpec& sphere) {
  if (!(sphere.radius > 0.0) || !std::isfinite(sphere.radius)) {
    throw DomainError(
        fmt::format("sphere radius must be positive, got {}", sphere.radius));
  }
}

double sphere_surface(const SphereSpec& sphere) {
  validate(sphere);
  return 4.0 * std::numbers::pi * sphere.radius * sphere.radius;
}

std::string_view to_string(EdgeMethod method) {
  return method == EdgeMethod::kSurfaceMatch ? "surface-match" : "inscribed-fit";
}

namespace {

EdgeSolution solution_at(double side, EdgeMethod method,
                         const FaceInventory& inventory, double sphere_area) {
  EdgeSolution s;
  s.side = side;
  s.side_sq = side * side;
  s.method = method;
  s.sphere_surface = sphere_area;
  for (const auto& [n, count] : inventory.entries) {
    const double area = count * regular_polygon_area({n, side});
    s.coverage[n] = area;
    s.flat_total += area;
  }
  s.flat_to_sphere_ratio = s.flat_total / sphere_area;
  return s;
}

}  // namespace

EdgeSolution surface_match_edge(const SphereSpec& sphere,
                                const FaceInventory& inventory) {
  const double target = sphere_surface(sphere);
  if (inventory.empty()) {
    throw DomainError("cannot solve for an edge with an empty face inventory");
  }
  validate(inventory);

  // Σ c_n·(n/4)·cot(π/n): total flat area per unit side².
  double area_per_side_sq = 0.0;
  for (const auto& [n, count] : inventory.entries) {
    area_per_side_sq += count * unit_area_coeff(n);
  }
  const double side = std::sqrt(target / area_per_side_sq);
  return solution_at(side, EdgeMethod::kSurfaceMatch, inventory, target);
}

EdgeSolution inscribed_fit_edge(const SphereSpec& sphere,
                                const SolidRecord& solid) {
  const double target = sphere_surface(sphere);
  if (!solid.circumradius_coeff) {
    throw CapabilityError(
        fmt::format("{} has no circumradius coefficient", solid.name));
  }
  const double side = sphere.radius / solid.circumradius_coeff->value;
  return solution_at(side, EdgeMethod::kInscribedFit, solid.inventory, target);
}

MethodComparison compare_methods(const SphereSpec& sphere,
                                 const SolidRecord& solid) {
  MethodComparison c;
  c.sphere = sphere;
  c.solid = solid.name;
  c.surface_match = surface_match_edge(sphere, solid.inventory);
  c.inscribed_fit = inscribed_fit_edge(sphere, solid);
  c.side_ratio = c.surface_match.side / c.inscribed_fit.side;
  c.flat_deficit = c.inscribed_fit.sphere_surface - c.inscribed_fit.flat_total;
  return c;
}

}  // namespace polysphere
