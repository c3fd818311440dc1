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

#include "polysphere/polygon_metrics.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "polysphere/errors.hpp"

namespace polysphere {

void validate(const PolygonSpec& spec) {
  if (spec.sides < 3) {
    throw DomainError(
        fmt::format("a polygon needs at least 3 sides, got {}", spec.sides));
  }
  if (!(spec.side >= 0.0) || !std::isfinite(spec.side)) {
    throw DomainError(
        fmt::format("polygon side must be finite and >= 0, got {}", spec.side));
  }
}

double unit_area_coeff(int sides) {
  validate(PolygonSpec{sides, 0.0});
  const double n = sides;
  return n / 4.0 / std::tan(std::numbers::pi / n);
}

double regular_polygon_area(const PolygonSpec& spec) {
  validate(spec);
  return unit_area_coeff(spec.sides) * spec.side * spec.side;
}

double regular_polygon_perimeter(const PolygonSpec& spec) {
  validate(spec);
  return spec.sides * spec.side;
}

double regular_polygon_circumradius(const PolygonSpec& spec) {
  validate(spec);
  return spec.side / (2.0 * std::sin(std::numbers::pi / spec.sides));
}

std::vector<Vec2> polygon_vertices(const PolygonSpec& spec) {
  const double radius = regular_polygon_circumradius(spec);
  const double step = 2.0 * std::numbers::pi / spec.sides;
  // Vertices 0 and 1 straddle the downward axis symmetrically.
  const double start = -std::numbers::pi / 2.0 - step / 2.0;

  std::vector<Vec2> points;
  points.reserve(spec.sides);
  for (int i = 0; i < spec.sides; ++i) {
    const double angle = start + i * step;
    points.push_back({radius * std::cos(angle), radius * std::sin(angle)});
  }
  // Snap the bottom edge so it is exactly horizontal.
  if (spec.sides > 1) points[1].y = points[0].y;
  return points;
}

double shoelace_area(const std::vector<Vec2>& points) {
  double twice = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    twice += cross(points[i], points[(i + 1) % points.size()]);
  }
  return 0.5 * twice;
}

namespace {
constexpr std::array<const char*, 11> kNames = {
    "triangle", "square",  "pentagon", "hexagon", "heptagon", "octagon",
    "nonagon",  "decagon", "hendecagon", "dodecagon", "tridecagon"};
}

std::string polygon_name(int sides) {
  if (sides >= 3 && sides < 3 + static_cast<int>(kNames.size())) {
    return kNames[sides - 3];
  }
  return fmt::format("{}-gon", sides);
}

std::string polygon_plural(int sides) { return polygon_name(sides) + "s"; }

}  // namespace polysphere
