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

#include <gtest/gtest.h>

#include "polysphere/errors.hpp"
#include "polysphere/polygon_metrics.hpp"

namespace {

using namespace polysphere;

constexpr double kPi = std::numbers::pi;
const FaceInventory kSoccer{{{5, 12}, {6, 20}}};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(SphereSurface, TwentyFiveCentimetreBall) {
  EXPECT_LT(rel(sphere_surface({12.5}), 625.0 * kPi), 1e-12);
  EXPECT_LT(rel(sphere_surface(SphereSpec::from_diameter(25.0)), 625.0 * kPi), 1e-12);
  EXPECT_THROW(sphere_surface({0.0}), DomainError);
  EXPECT_THROW(sphere_surface({-1.0}), DomainError);
}

TEST(SurfaceMatch, SoccerBallSide) {
  const EdgeSolution s = surface_match_edge({12.5}, kSoccer);
  EXPECT_EQ(s.method, EdgeMethod::kSurfaceMatch);
  // 625π / (30√3 + 15(1+√5)/√(10−2√5)) evaluated independently.
  EXPECT_NEAR(s.side_sq, 27.04268962730965, 1e-10);
  EXPECT_NEAR(s.side, 5.200258611579779, 1e-11);
  EXPECT_NEAR(s.side_sq, 27.0, 0.05);
  EXPECT_NEAR(s.side, 5.2, 0.005);
  EXPECT_LT(rel(s.side_sq, s.side * s.side), 1e-12);
}

TEST(SurfaceMatch, CoverageBreakdown) {
  const EdgeSolution s = surface_match_edge({12.5}, kSoccer);
  ASSERT_EQ(s.coverage.size(), 2u);
  const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
  EXPECT_LT(rel(s.coverage.at(6), 30.0 * s3 * s.side_sq), 1e-12);
  EXPECT_LT(rel(s.coverage.at(5), 15.0 * (1.0 + s5) / std::sqrt(10.0 - 2.0 * s5) * s.side_sq), 1e-12);
  EXPECT_NEAR(s.coverage.at(6), 1405.179372234486, 1e-8);
  EXPECT_NEAR(s.coverage.at(5), 558.3160362591352, 1e-8);
  EXPECT_LT(rel(s.flat_total, 625.0 * kPi), 1e-9);
  EXPECT_NEAR(s.flat_to_sphere_ratio, 1.0, 1e-9);
}

TEST(SurfaceMatch, DenominatorIdentity) {
  const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
  double sigma = 0.0;
  for (const auto& [n, c] : kSoccer.entries) sigma += c * unit_area_coeff(n);
  EXPECT_LT(rel(sigma, 30.0 * s3 + 15.0 * (1.0 + s5) / std::sqrt(10.0 - 2.0 * s5)), 1e-12);
  EXPECT_NEAR(sigma, 72.60725303413392, 1e-11);
}

TEST(SurfaceMatch, HalfRadiusHalfSide) {
  EXPECT_NEAR(surface_match_edge({6.25}, kSoccer).side, 2.6001293057898896, 1e-12);
}

TEST(SurfaceMatch, CubeClosedForm) {
  const EdgeSolution s = surface_match_edge({12.5}, {{{4, 6}}});
  EXPECT_LT(rel(s.side, 12.5 * std::sqrt(2.0 * kPi / 3.0)), 1e-12);
  EXPECT_NEAR(s.side, 18.09, 0.01);
}

TEST(SurfaceMatch, Errors) {
  EXPECT_THROW(surface_match_edge({12.5}, FaceInventory{}), DomainError);
  EXPECT_THROW(surface_match_edge({0.0}, kSoccer), DomainError);
  EXPECT_THROW(surface_match_edge({12.5}, {{{5, 1}}}), InventoryError);
}

TEST(SurfaceMatch, ResidualAndReconstructionOverCatalog) {
  for (const auto& solid : catalog()) {
    for (double r : {0.5, 12.5, 300.0}) {
      const EdgeSolution s = surface_match_edge({r}, solid.inventory);
      EXPECT_LT(std::abs(s.flat_total - 4.0 * kPi * r * r) / (4.0 * kPi * r * r), 1e-9);
      for (const auto& [n, c] : solid.inventory.entries) {
        EXPECT_LT(rel(s.coverage.at(n), c * regular_polygon_area({n, s.side})), 1e-12);
      }
    }
  }
}

TEST(InscribedFit, SoccerBall) {
  const auto& ti = catalog_lookup("truncated-icosahedron");
  const EdgeSolution s = inscribed_fit_edge({12.5}, ti);
  EXPECT_EQ(s.method, EdgeMethod::kInscribedFit);
  EXPECT_NEAR(s.side, 5.044352654189971, 1e-11);
  EXPECT_NEAR(s.flat_total, 1847.527399642265, 1e-8);
  EXPECT_NEAR(s.sphere_surface, 1963.495408493621, 1e-8);
  EXPECT_NEAR(s.flat_to_sphere_ratio, 0.9409379780825025, 1e-12);
  EXPECT_LT(s.flat_total, s.sphere_surface);
}

TEST(InscribedFit, HullConfirmsCircumradius) {
  const auto& ti = catalog_lookup("truncated-icosahedron");
  const EdgeSolution s = inscribed_fit_edge({12.5}, ti);
  const HullMetrics m = hull_metrics_oracle(truncated_icosahedron_vertices(s.side));
  EXPECT_NEAR(m.circumradius, 12.5, 1e-9);
}

TEST(InscribedFit, UnitEdgeRadius) {
  const auto& ti = catalog_lookup("truncated-icosahedron");
  EXPECT_NEAR(inscribed_fit_edge({2.4780186590676155}, ti).side, 1.0, 1e-9);
}

TEST(InscribedFit, MissingRadiusIsCapabilityError) {
  EXPECT_THROW(inscribed_fit_edge({12.5}, catalog_lookup("snub-cube")), CapabilityError);
  EXPECT_THROW(compare_methods({12.5}, catalog_lookup("snub-dodecahedron")), CapabilityError);
}

TEST(Compare, SoccerBallRatio) {
  const MethodComparison c = compare_methods({12.5}, catalog_lookup("truncated-icosahedron"));
  EXPECT_EQ(c.solid, "truncated-icosahedron");
  EXPECT_NEAR(c.side_ratio, 1.0309070297177396, 1e-12);
  const auto& ti = catalog_lookup("truncated-icosahedron");
  const double rc = ti.circumradius_coeff->value;
  EXPECT_LT(rel(c.side_ratio, std::sqrt(4.0 * kPi * rc * rc / ti.surface_coeff->value)), 1e-12);
  EXPECT_NEAR(c.flat_deficit, 1963.495408493621 - 1847.527399642265, 1e-7);
}

TEST(Compare, CubeRatio) {
  const MethodComparison c = compare_methods({12.5}, catalog_lookup("cube"));
  EXPECT_LT(rel(c.side_ratio, std::sqrt(kPi / 2.0)), 1e-12);
}

TEST(Compare, RatioIndependentOfRadius) {
  const auto& ti = catalog_lookup("truncated-icosahedron");
  const double base = compare_methods({12.5}, ti).side_ratio;
  for (double r : {0.01, 1.0, 7.3, 1e4}) {
    EXPECT_LT(rel(compare_methods({r}, ti).side_ratio, base), 1e-12);
  }
}

TEST(Homogeneity, BothMethodsScaleLinearly) {
  for (const auto& solid : catalog()) {
    const auto base = surface_match_edge({12.5}, solid.inventory).side;
    for (double lambda : {0.1, 2.0, 7.0}) {
      EXPECT_LT(rel(surface_match_edge({lambda * 12.5}, solid.inventory).side, lambda * base), 1e-12);
      if (solid.circumradius_coeff) {
        const auto ib = inscribed_fit_edge({12.5}, solid).side;
        EXPECT_LT(rel(inscribed_fit_edge({lambda * 12.5}, solid).side, lambda * ib), 1e-12);
      }
    }
  }
}

TEST(Ordering, SurfaceMatchAlwaysOversizes) {
  for (const auto& solid : catalog()) {
    if (!solid.has_metrics()) continue;
    const MethodComparison c = compare_methods({12.5}, solid);
    EXPECT_GT(c.surface_match.side, c.inscribed_fit.side) << solid.name;
    EXPECT_LT(c.inscribed_fit.flat_total, c.inscribed_fit.sphere_surface) << solid.name;
  }
}

}  // namespace
