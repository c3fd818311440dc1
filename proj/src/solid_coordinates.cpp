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

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include <fmt/format.h>

#include "polysphere/errors.hpp"
#include "polysphere/solid_catalog.hpp"

namespace polysphere {
namespace {

constexpr double kPhi = std::numbers::phi;

void push_unique(std::vector<Vec3>& points, Vec3 p) {
  if (std::find(points.begin(), points.end(), p) == points.end()) {
    points.push_back(p);
  }
}

// All sign choices of (a, b, c) under each cyclic (even) permutation.
std::vector<Vec3> even_permutations_all_signs(std::initializer_list<Vec3> seeds) {
  std::vector<Vec3> out;
  for (const Vec3& s : seeds) {
    for (int signs = 0; signs < 8; ++signs) {
      const Vec3 p{(signs & 1) ? -s.x : s.x, (signs & 2) ? -s.y : s.y,
                   (signs & 4) ? -s.z : s.z};
      push_unique(out, p);
      push_unique(out, {p.y, p.z, p.x});
      push_unique(out, {p.z, p.x, p.y});
    }
  }
  return out;
}

std::vector<Vec3> scaled(std::vector<Vec3> points, double factor) {
  for (Vec3& p : points) p = factor * p;
  return points;
}

// Edge length 2.
std::vector<Vec3> icosahedron_raw() {
  return even_permutations_all_signs({{0.0, 1.0, kPhi}});
}

std::vector<Vec3> tetrahedron_unit() {
  // Alternate corners of the (±1)³ cube; edge 2√2.
  return scaled({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}},
                1.0 / (2.0 * std::numbers::sqrt2));
}

std::vector<Vec3> cube_unit() {
  std::vector<Vec3> out;
  for (int signs = 0; signs < 8; ++signs) {
    out.push_back({(signs & 1) ? -0.5 : 0.5, (signs & 2) ? -0.5 : 0.5,
                   (signs & 4) ? -0.5 : 0.5});
  }
  return out;
}

std::vector<Vec3> icosahedron_unit() { return scaled(icosahedron_raw(), 0.5); }

std::vector<Vec3> dodecahedron_unit() {
  // (±1, ±1, ±1) and cyclic (0, ±1/φ, ±φ); edge 2/φ.
  std::vector<Vec3> out = even_permutations_all_signs({{0.0, 1.0 / kPhi, kPhi}});
  for (const Vec3& p : cube_unit()) out.push_back(2.0 * p);
  return scaled(std::move(out), kPhi / 2.0);
}

std::vector<Vec3> rhombicosidodecahedron_unit() {
  // Even permutations of (±1, ±1, ±φ³), (±φ², ±φ, ±2φ), (±(2+φ), 0, ±φ²);
  // edge 2.
  const double phi2 = kPhi * kPhi;
  return scaled(even_permutations_all_signs({{1.0, 1.0, phi2 * kPhi},
                                             {phi2, kPhi, 2.0 * kPhi},
                                             {2.0 + kPhi, 0.0, phi2}}),
                0.5);
}

std::vector<Vec3> truncated_icosahedron_unit() {
  return truncated_icosahedron_vertices(1.0);
}

const std::map<std::string, std::function<std::vector<Vec3>()>, std::less<>>&
constructions() {
  static const std::map<std::string, std::function<std::vector<Vec3>()>,
                        std::less<>>
      table = {
          {"tetrahedron", tetrahedron_unit},
          {"cube", cube_unit},
          {"icosahedron", icosahedron_unit},
          {"dodecahedron", dodecahedron_unit},
          {"truncated-icosahedron", truncated_icosahedron_unit},
          {"rhombicosidodecahedron", rhombicosidodecahedron_unit},
      };
  return table;
}

}  // namespace

std::vector<Vec3> truncated_icosahedron_vertices(double edge) {
  if (!(edge > 0.0) || !std::isfinite(edge)) {
    throw DomainError(fmt::format("edge must be positive, got {}", edge));
  }
  const std::vector<Vec3> ico = icosahedron_raw();
  constexpr double kIcoEdge = 2.0;

  std::vector<Vec3> points;
  points.reserve(60);
  for (std::size_t i = 0; i < ico.size(); ++i) {
    for (std::size_t j = i + 1; j < ico.size(); ++j) {
      if (std::abs(distance(ico[i], ico[j]) - kIcoEdge) > 1e-9) continue;
      const Vec3 d = ico[j] - ico[i];
      points.push_back(ico[i] + (1.0 / 3.0) * d);
      points.push_back(ico[i] + (2.0 / 3.0) * d);
    }
  }
  if (points.size() != 60) {
    throw GeometryError(
        fmt::format("icosahedron truncation produced {} points", points.size()));
  }
  // Cutting at the thirds leaves edges of length kIcoEdge / 3.
  return scaled(std::move(points), edge / (kIcoEdge / 3.0));
}

bool has_coordinates(std::string_view name) {
  return constructions().contains(normalize_solid_name(name));
}

std::vector<Vec3> unit_edge_vertices(std::string_view name) {
  const std::string key = normalize_solid_name(name);
  const auto it = constructions().find(key);
  if (it == constructions().end()) {
    throw CapabilityError(
        fmt::format("no coordinate construction for '{}'", key));
  }
  return it->second();
}

}  // namespace polysphere
