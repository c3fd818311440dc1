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

#include <map>
#include <string>
#include <string_view>

#include "polysphere/solid_catalog.hpp"

namespace polysphere {

struct SphereSpec {
  double radius = 0.0;  // cm

  static SphereSpec from_diameter(double diameter) { return {diameter / 2.0}; }
  double diameter() const { return 2.0 * radius; }
};

/// Throws DomainError unless radius is finite and > 0.
void validate(const SphereSpec& sphere);

/// 4πr², in cm².
double sphere_surface(const SphereSpec& sphere);

enum class EdgeMethod { kSurfaceMatch, kInscribedFit };

std::string_view to_string(EdgeMethod method);

/// The common polygon side for a sphere, with the flat-area breakdown.
struct EdgeSolution {
  double side = 0.0;     // cm
  double side_sq = 0.0;  // cm²
  EdgeMethod method = EdgeMethod::kSurfaceMatch;
  std::map<int, double> coverage;  // n -> total area of all n-gons, cm²
  double flat_total = 0.0;
  double sphere_surface = 0.0;
  double flat_to_sphere_ratio = 0.0;
};

/// Chooses the side so the total flat face area equals 4πr². The equation is
/// linear in side², so the solution is closed-form.
EdgeSolution surface_match_edge(const SphereSpec& sphere,
                                const FaceInventory& inventory);

/// Chooses the side so the solid's circumscribed sphere is the target
/// sphere. Throws CapabilityError without a circumradius coefficient.
EdgeSolution inscribed_fit_edge(const SphereSpec& sphere,
                                const SolidRecord& solid);

struct MethodComparison {
  SphereSpec sphere;
  std::string solid;
  EdgeSolution surface_match;
  EdgeSolution inscribed_fit;
  double side_ratio = 0.0;    // surface-match side / inscribed-fit side
  double flat_deficit = 0.0;  // sphere area not covered by the inscribed fit, cm²
};

MethodComparison compare_methods(const SphereSpec& sphere,
                                 const SolidRecord& solid);

}  // namespace polysphere
