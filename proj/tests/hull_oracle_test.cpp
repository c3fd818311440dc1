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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "polysphere/errors.hpp"
#include "polysphere/polygon_metrics.hpp"
#include "polysphere/solid_catalog.hpp"

namespace {

using namespace polysphere;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<Vec3> unit_cube_corners() {
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i) pts.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
  return pts;
}

TEST(HullOracle, UnitCube) {
  const HullMetrics m = hull_metrics_oracle(unit_cube_corners());
  EXPECT_NEAR(m.volume, 1.0, 1e-12);
  EXPECT_NEAR(m.surface, 6.0, 1e-12);
  EXPECT_NEAR(m.circumradius, std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_EQ(m.faces, 6);
}

TEST(HullOracle, RegularTetrahedron) {
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  const std::vector<Vec3> pts{{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  const HullMetrics m = hull_metrics_oracle(pts);
  EXPECT_NEAR(m.volume, 0.11785113019775792, 1e-12);
  EXPECT_NEAR(m.surface, std::sqrt(3.0), 1e-12);
}

TEST(HullOracle, InteriorPointsAndTranslationDoNotMatter) {
  auto pts = unit_cube_corners();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int i = 0; i < 30; ++i) pts.push_back({u(rng), u(rng), u(rng)});
  for (Vec3& p : pts) p = p + Vec3{10.0, -3.0, 4.5};
  const HullMetrics m = hull_metrics_oracle(pts);
  EXPECT_NEAR(m.volume, 1.0, 1e-9);
  EXPECT_NEAR(m.surface, 6.0, 1e-9);
}

TEST(HullOracle, TruncatedIcosahedronMatchesClosedForms) {
  const auto& ti = catalog_lookup("truncated-icosahedron");
  const HullMetrics m = hull_metrics_oracle(truncated_icosahedron_vertices(1.0));
  EXPECT_EQ(m.faces, 32);
  EXPECT_LT(rel(m.volume, 55.28773075812274), 1e-9);
  EXPECT_LT(rel(m.volume, ti.volume_coeff->value), 1e-9);
  EXPECT_LT(rel(m.surface, ti.surface_coeff->value), 1e-9);
  EXPECT_LT(rel(m.circumradius, ti.circumradius_coeff->value), 1e-9);
  const double by_faces = 12 * regular_polygon_area({5, 1.0}) + 20 * regular_polygon_area({6, 1.0});
  EXPECT_LT(rel(ti.surface_coeff->value, by_faces), 1e-12);
}

TEST(HullOracle, EveryConstructionMatchesItsCoefficients) {
  for (const auto& r : catalog()) {
    if (!has_coordinates(r.name)) continue;
    const HullMetrics m = hull_metrics_oracle(unit_edge_vertices(r.name));
    EXPECT_EQ(m.faces, r.faces) << r.name;
    EXPECT_LT(rel(m.volume, r.volume_coeff->value), 1e-9) << r.name;
    EXPECT_LT(rel(m.surface, r.surface_coeff->value), 1e-9) << r.name;
    EXPECT_LT(rel(m.circumradius, r.circumradius_coeff->value), 1e-9) << r.name;
  }
}

TEST(HullOracle, RatioIsScaleInvariant) {
  const auto ratio = [](double edge) {
    const HullMetrics m = hull_metrics_oracle(truncated_icosahedron_vertices(edge));
    return m.volume / (4.0 * std::acos(-1.0) / 3.0 * std::pow(m.circumradius, 3));
  };
  const double unit = ratio(1.0);
  EXPECT_LT(rel(ratio(3.7), unit), 1e-9);
  EXPECT_LT(rel(ratio(12.5), unit), 1e-9);
  EXPECT_LT(rel(unit, circumsphere_volume_ratio(catalog_lookup("truncated-icosahedron"))), 1e-9);
}

TEST(HullOracle, DegenerateInputs) {
  const std::vector<Vec3> three{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  EXPECT_THROW(hull_metrics_oracle(three), GeometryError);
  const std::vector<Vec3> flat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0.5, 0.2, 0}};
  EXPECT_THROW(hull_metrics_oracle(flat), GeometryError);
  const std::vector<Vec3> same(5, Vec3{1, 2, 3});
  EXPECT_THROW(hull_metrics_oracle(same), GeometryError);
  const std::vector<Vec3> line{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}};
  EXPECT_THROW(hull_metrics_oracle(line), GeometryError);
}

}  // namespace
