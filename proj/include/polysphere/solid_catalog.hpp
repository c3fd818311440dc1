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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polysphere/vec.hpp"

namespace polysphere {

/// Multiset of face types: polygon side count n -> number of such faces.
struct FaceInventory {
  std::map<int, int> entries;

  bool empty() const { return entries.empty(); }
  friend bool operator==(const FaceInventory&, const FaceInventory&) = default;
};

/// Throws InventoryError if any n < 3, any count < 1, or Σ n·c_n is odd.
void validate(const FaceInventory& inventory);

struct FaceCounts {
  int faces = 0;
  int edges = 0;
  int vertices = 0;
  friend bool operator==(const FaceCounts&, const FaceCounts&) = default;
};

/// F = Σ c_n, E = Σ n·c_n / 2, V = E − F + 2.
FaceCounts derive_counts(const FaceInventory& inventory);

enum class Family { kPlatonic, kArchimedean };

std::string_view to_string(Family family);

/// Closed-form metric coefficient: the value per unit edge plus the
/// expression it was evaluated from.
struct Coefficient {
  double value = 0.0;
  std::string expression;
};

struct SolidRecord {
  std::string name;
  Family family = Family::kPlatonic;
  FaceInventory inventory;
  int faces = 0;
  int edges = 0;
  int vertices = 0;
  std::optional<Coefficient> circumradius_coeff;  // R / a
  std::optional<Coefficient> volume_coeff;        // Vol / a³
  std::optional<Coefficient> surface_coeff;       // Area / a²
  // Set when a widely quoted roundness figure disagrees with the computed
  // circumscribed-sphere volume ratio.
  std::optional<std::string> roundness_note;

  FaceCounts counts() const { return {faces, edges, vertices}; }
  bool has_metrics() const {
    return circumradius_coeff && volume_coeff && surface_coeff;
  }
};

/// True iff E = F + V − 2 and the stored counts agree with the inventory.
bool euler_check(const SolidRecord& record);

/// Polyhedron volume over the volume of its circumscribed sphere. Throws
/// CapabilityError if the record lacks volume or circumradius data.
double circumsphere_volume_ratio(const SolidRecord& record);

/// The 5 Platonic and 13 Archimedean solids, Platonic first.
const std::vector<SolidRecord>& catalog();

/// Case-insensitive; spaces and underscores are treated as hyphens, and a
/// few aliases ("buckyball", "c60", "soccer-ball") are accepted. Throws
/// LookupError listing the valid names.
const SolidRecord& catalog_lookup(std::string_view name);

/// Canonical kebab-case form of a user-supplied solid name.
std::string normalize_solid_name(std::string_view name);

std::vector<std::string> catalog_names();

// ---------------------------------------------------------------------------
// Coordinate constructions

/// The 60 vertices of the truncated icosahedron (C60 atom sites), built by
/// cutting every edge of the (0, ±1, ±φ) icosahedron at its thirds and
/// rescaled so every edge equals `edge`. Centred on the origin.
std::vector<Vec3> truncated_icosahedron_vertices(double edge);

/// True when a coordinate construction exists for the named solid.
bool has_coordinates(std::string_view name);

/// Unit-edge vertex coordinates centred on the origin. Throws
/// CapabilityError for solids without a construction.
std::vector<Vec3> unit_edge_vertices(std::string_view name);

// ---------------------------------------------------------------------------
// Convex hull oracle

struct HullMetrics {
  double volume = 0.0;
  double surface = 0.0;
  double circumradius = 0.0;  // max distance from the vertex centroid
  int faces = 0;              // number of distinct supporting planes
};

/// Volume, surface area and circumradius of the convex hull of `points`,
/// found by brute-force enumeration of supporting planes. Throws
/// GeometryError for fewer than 4 points or a flat point set.
HullMetrics hull_metrics_oracle(std::span<const Vec3> points);

}  // namespace polysphere
