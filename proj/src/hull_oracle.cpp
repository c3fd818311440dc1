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
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "polysphere/errors.hpp"
#include "polysphere/solid_catalog.hpp"

// Brute-force convex hull: every point triple spans a candidate plane, kept
// when all points lie on one side. Cubic in the point count, which is fine
// for the ≤ 120-vertex solids this validates, and shares no code with the
// mesh face recovery.

namespace polysphere {
namespace {

struct Plane {
  Vec3 normal;  // unit, outward
  double offset = 0.0;
};

double polygon_area(const std::vector<Vec3>& ring, Vec3 normal) {
  Vec3 c{};
  for (const Vec3& p : ring) c = c + p;
  c = (1.0 / ring.size()) * c;

  // Order around the face centroid.
  const Vec3 u = normalized(ring.front() - c);
  const Vec3 v = cross(normal, u);
  std::vector<std::pair<double, Vec3>> ordered;
  for (const Vec3& p : ring) {
    const Vec3 d = p - c;
    ordered.emplace_back(std::atan2(dot(d, v), dot(d, u)), p);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Vec3 twice{};
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    twice = twice + cross(ordered[i].second - c,
                          ordered[(i + 1) % ordered.size()].second - c);
  }
  return 0.5 * std::abs(dot(twice, normal));
}

}  // namespace

HullMetrics hull_metrics_oracle(std::span<const Vec3> points) {
  const std::size_t n = points.size();
  if (n < 4) {
    throw GeometryError(fmt::format("hull needs >= 4 points, got {}", n));
  }

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      scale = std::max(scale, distance(points[i], points[j]));
    }
  }
  if (scale == 0.0) throw GeometryError("hull input points are all identical");
  const double eps = 1e-9 * scale;

  std::vector<Plane> planes;
  auto on_known_plane = [&](Vec3 a, Vec3 b, Vec3 c) {
    for (const Plane& pl : planes) {
      if (std::abs(dot(pl.normal, a) - pl.offset) <= eps &&
          std::abs(dot(pl.normal, b) - pl.offset) <= eps &&
          std::abs(dot(pl.normal, c) - pl.offset) <= eps) {
        return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec3 raw = cross(points[j] - points[i], points[k] - points[i]);
        if (norm(raw) <= eps * scale) continue;  // collinear
        if (on_known_plane(points[i], points[j], points[k])) continue;

        Vec3 normal = normalized(raw);
        double offset = dot(normal, points[i]);
        bool above = false;
        bool below = false;
        for (const Vec3& p : points) {
          const double s = dot(normal, p) - offset;
          if (s > eps) above = true;
          if (s < -eps) below = true;
          if (above && below) break;
        }
        if (above && below) continue;
        if (!above && !below) {
          throw GeometryError("hull input points are coplanar");
        }
        if (above) {
          normal = -normal;
          offset = -offset;
        }
        planes.push_back({normal, offset});
      }
    }
  }
  if (planes.size() < 4) {
    throw GeometryError("hull input points are degenerate");
  }

  HullMetrics m;
  m.faces = static_cast<int>(planes.size());
  for (const Plane& pl : planes) {
    std::vector<Vec3> ring;
    for (const Vec3& p : points) {
      if (std::abs(dot(pl.normal, p) - pl.offset) <= eps) ring.push_back(p);
    }
    const double area = polygon_area(ring, pl.normal);
    m.surface += area;
    // Cone from the origin over each face; signed offsets make the sum
    // independent of where the origin sits.
    m.volume += area * pl.offset / 3.0;
  }

  Vec3 centroid{};
  for (const Vec3& p : points) centroid = centroid + p;
  centroid = (1.0 / n) * centroid;
  for (const Vec3& p : points) {
    m.circumradius = std::max(m.circumradius, distance(p, centroid));
  }
  return m;
}

}  // namespace polysphere
