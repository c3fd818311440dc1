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
#include <string_view>
#include <vector>

#include "polysphere/solid_catalog.hpp"
#include "polysphere/vec.hpp"

namespace polysphere {

struct MeshModel {
  std::string name;
  std::vector<Vec3> vertices;           // cm
  std::vector<std::vector<int>> faces;  // counterclockwise seen from outside
  std::vector<int> groups;              // side count of each face

  int edge_count() const;
};

/// How to size a mesh: a fixed edge length, or a fixed circumradius.
struct MeshScale {
  enum class Kind { kEdge, kCircumradius };
  Kind kind = Kind::kEdge;
  double value = 1.0;  // cm

  static MeshScale by_edge(double edge) { return {Kind::kEdge, edge}; }
  static MeshScale by_circumradius(double r) { return {Kind::kCircumradius, r}; }
};

/// Builds the mesh from the solid's coordinate construction. Faces are
/// recovered from the edge graph (nearest-neighbour pairs) by walking the
/// cyclic neighbour order around each vertex, then checked for planarity.
/// Throws CapabilityError when the solid has no construction.
MeshModel build_solid_mesh(const SolidRecord& solid, MeshScale scale);

/// Throws GeometryError unless every face has >= 3 distinct in-range
/// indices, faces are planar to `planarity_tol` · edge, winding is outward
/// and V − E + F = 2.
void validate(const MeshModel& mesh, double planarity_tol = 1e-6);

/// Wavefront OBJ: 6-decimal `v` lines, one `g` per face type, n-gon `f`
/// lines with 1-based indices.
std::string export_obj(const MeshModel& mesh);

/// Reads back the subset of OBJ that export_obj writes. Group labels are
/// recovered from the `g` lines.
MeshModel parse_obj(std::string_view text);

}  // namespace polysphere
