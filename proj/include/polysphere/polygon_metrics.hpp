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

#include <string>
#include <vector>

#include "polysphere/vec.hpp"

namespace polysphere {

/// A regular n-gon with the given side length (cm). A zero side is a valid
/// degenerate polygon whose metrics are all zero.
struct PolygonSpec {
  int sides = 3;
  double side = 0.0;
};

/// Throws DomainError unless sides >= 3 and side >= 0.
void validate(const PolygonSpec& spec);

/// Area (n/4)·s²·cot(π/n), in cm².
double regular_polygon_area(const PolygonSpec& spec);

double regular_polygon_perimeter(const PolygonSpec& spec);

/// Radius of the circle through the vertices, s / (2·sin(π/n)).
double regular_polygon_circumradius(const PolygonSpec& spec);

/// Area per unit side squared, (n/4)·cot(π/n).
double unit_area_coeff(int sides);

/// Vertices in counterclockwise order, centred on the origin, with the
/// first edge (vertex 0 to vertex 1) horizontal along the bottom.
std::vector<Vec2> polygon_vertices(const PolygonSpec& spec);

/// Signed shoelace area of a closed 2D polygon.
double shoelace_area(const std::vector<Vec2>& points);

/// "triangle", "square", "pentagon", ... ("14-gon" past the named range).
std::string polygon_name(int sides);

/// Plural group label used in meshes and reports ("pentagons", "hexagons").
std::string polygon_plural(int sides);

}  // namespace polysphere
