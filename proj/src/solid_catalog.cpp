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

#include "polysphere/solid_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <utility>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "polysphere/errors.hpp"
#include "polysphere/polygon_metrics.hpp"

namespace polysphere {

void validate(const FaceInventory& inventory) {
  long long incidences = 0;
  for (const auto& [n, count] : inventory.entries) {
    if (n < 3) {
      throw InventoryError(fmt::format("face type with {} sides", n));
    }
    if (count < 1) {
      throw InventoryError(
          fmt::format("face count for {}-gons must be >= 1, got {}", n, count));
    }
    incidences += static_cast<long long>(n) * count;
  }
  if (incidences % 2 != 0) {
    throw InventoryError(fmt::format(
        "sum of n*c_n is {} (odd); faces cannot pair up into closed edges",
        incidences));
  }
}

FaceCounts derive_counts(const FaceInventory& inventory) {
  validate(inventory);
  FaceCounts counts;
  int incidences = 0;
  for (const auto& [n, count] : inventory.entries) {
    counts.faces += count;
    incidences += n * count;
  }
  counts.edges = incidences / 2;
  counts.vertices = counts.edges - counts.faces + 2;
  return counts;
}

std::string_view to_string(Family family) {
  return family == Family::kPlatonic ? "platonic" : "archimedean";
}

bool euler_check(const SolidRecord& record) {
  if (record.edges != record.faces + record.vertices - 2) return false;
  try {
    return derive_counts(record.inventory) == record.counts();
  } catch (const InventoryError&) {
    return false;
  }
}

double circumsphere_volume_ratio(const SolidRecord& record) {
  if (!record.volume_coeff || !record.circumradius_coeff) {
    throw CapabilityError(fmt::format(
        "{} has no volume/circumradius coefficients", record.name));
  }
  const double r = record.circumradius_coeff->value;
  return record.volume_coeff->value / (4.0 * std::numbers::pi / 3.0 * r * r * r);
}

namespace {

Coefficient coeff(double value, std::string expression) {
  return {value, std::move(expression)};
}

std::vector<SolidRecord> build_catalog() {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  const double pent = std::sqrt(25.0 + 10.0 * s5);  // 4·(pentagon area)

  auto solid = [](std::string name, Family family, FaceInventory inventory,
                  int f, int e, int v) {
    SolidRecord r;
    r.name = std::move(name);
    r.family = family;
    r.inventory = std::move(inventory);
    r.faces = f;
    r.edges = e;
    r.vertices = v;
    return r;
  };
  auto with = [](SolidRecord r, std::optional<Coefficient> radius,
                 std::optional<Coefficient> volume,
                 std::optional<Coefficient> surface) {
    r.circumradius_coeff = std::move(radius);
    r.volume_coeff = std::move(volume);
    r.surface_coeff = std::move(surface);
    return r;
  };
  constexpr auto P = Family::kPlatonic;
  constexpr auto A = Family::kArchimedean;

  std::vector<SolidRecord> out;

  out.push_back(with(solid("tetrahedron", P, {{{3, 4}}}, 4, 6, 4),
                     coeff(std::sqrt(6.0) / 4.0, "sqrt(6)/4"),
                     coeff(s2 / 12.0, "sqrt(2)/12"), coeff(s3, "sqrt(3)")));
  out.push_back(with(solid("cube", P, {{{4, 6}}}, 6, 12, 8),
                     coeff(s3 / 2.0, "sqrt(3)/2"), coeff(1.0, "1"),
                     coeff(6.0, "6")));
  out.push_back(with(solid("octahedron", P, {{{3, 8}}}, 8, 12, 6),
                     coeff(s2 / 2.0, "sqrt(2)/2"), coeff(s2 / 3.0, "sqrt(2)/3"),
                     coeff(2.0 * s3, "2*sqrt(3)")));
  out.push_back(with(solid("dodecahedron", P, {{{5, 12}}}, 12, 30, 20),
                     coeff(s3 * (1.0 + s5) / 4.0, "sqrt(3)*(1+sqrt(5))/4"),
                     coeff((15.0 + 7.0 * s5) / 4.0, "(15+7*sqrt(5))/4"),
                     coeff(3.0 * pent, "3*sqrt(25+10*sqrt(5))")));
  out.push_back(with(solid("icosahedron", P, {{{3, 20}}}, 20, 30, 12),
                     coeff(std::sqrt(10.0 + 2.0 * s5) / 4.0, "sqrt(10+2*sqrt(5))/4"),
                     coeff(5.0 * (3.0 + s5) / 12.0, "5*(3+sqrt(5))/12"),
                     coeff(5.0 * s3, "5*sqrt(3)")));

  out.push_back(with(solid("truncated-tetrahedron", A, {{{3, 4}, {6, 4}}}, 8, 18, 12),
                     coeff(std::sqrt(22.0) / 4.0, "sqrt(22)/4"),
                     coeff(23.0 * s2 / 12.0, "23*sqrt(2)/12"),
                     coeff(7.0 * s3, "7*sqrt(3)")));
  out.push_back(with(solid("cuboctahedron", A, {{{3, 8}, {4, 6}}}, 14, 24, 12),
                     coeff(1.0, "1"), coeff(5.0 * s2 / 3.0, "5*sqrt(2)/3"),
                     coeff(6.0 + 2.0 * s3, "6+2*sqrt(3)")));
  out.push_back(with(solid("truncated-cube", A, {{{3, 8}, {8, 6}}}, 14, 36, 24),
                     coeff(std::sqrt(7.0 + 4.0 * s2) / 2.0, "sqrt(7+4*sqrt(2))/2"),
                     coeff((21.0 + 14.0 * s2) / 3.0, "(21+14*sqrt(2))/3"),
                     coeff(2.0 * (6.0 + 6.0 * s2 + s3), "2*(6+6*sqrt(2)+sqrt(3))")));
  out.push_back(with(solid("truncated-octahedron", A, {{{4, 6}, {6, 8}}}, 14, 36, 24),
                     coeff(std::sqrt(10.0) / 2.0, "sqrt(10)/2"),
                     coeff(8.0 * s2, "8*sqrt(2)"),
                     coeff(6.0 + 12.0 * s3, "6+12*sqrt(3)")));
  out.push_back(with(solid("rhombicuboctahedron", A, {{{3, 8}, {4, 18}}}, 26, 48, 24),
                     coeff(std::sqrt(5.0 + 2.0 * s2) / 2.0, "sqrt(5+2*sqrt(2))/2"),
                     coeff((12.0 + 10.0 * s2) / 3.0, "(12+10*sqrt(2))/3"),
                     coeff(2.0 * (9.0 + s3), "2*(9+sqrt(3))")));
  out.push_back(with(
      solid("truncated-cuboctahedron", A, {{{4, 12}, {6, 8}, {8, 6}}}, 26, 72, 48),
      coeff(std::sqrt(13.0 + 6.0 * s2) / 2.0, "sqrt(13+6*sqrt(2))/2"),
      coeff(22.0 + 14.0 * s2, "22+14*sqrt(2)"),
      coeff(12.0 * (2.0 + s2 + s3), "12*(2+sqrt(2)+sqrt(3))")));
  // The snub solids' radius and volume are roots of cubics; only the
  // surface coefficient is carried.
  out.push_back(with(solid("snub-cube", A, {{{3, 32}, {4, 6}}}, 38, 60, 24),
                     std::nullopt, std::nullopt,
                     coeff(6.0 + 8.0 * s3, "6+8*sqrt(3)")));
  out.push_back(with(solid("icosidodecahedron", A, {{{3, 20}, {5, 12}}}, 32, 60, 30),
                     coeff((1.0 + s5) / 2.0, "(1+sqrt(5))/2"),
                     coeff((45.0 + 17.0 * s5) / 6.0, "(45+17*sqrt(5))/6"),
                     coeff(5.0 * s3 + 3.0 * pent, "5*sqrt(3)+3*sqrt(25+10*sqrt(5))")));
  out.push_back(with(
      solid("truncated-dodecahedron", A, {{{3, 20}, {10, 12}}}, 32, 90, 60),
      coeff(std::sqrt(74.0 + 30.0 * s5) / 4.0, "sqrt(74+30*sqrt(5))/4"),
      coeff(5.0 * (99.0 + 47.0 * s5) / 12.0, "5*(99+47*sqrt(5))/12"),
      coeff(5.0 * (s3 + 6.0 * std::sqrt(5.0 + 2.0 * s5)),
            "5*(sqrt(3)+6*sqrt(5+2*sqrt(5)))")));
  out.push_back(with(
      solid("truncated-icosahedron", A, {{{5, 12}, {6, 20}}}, 32, 90, 60),
      coeff(std::sqrt(58.0 + 18.0 * s5) / 4.0, "sqrt(58+18*sqrt(5))/4"),
      coeff((125.0 + 43.0 * s5) / 4.0, "(125+43*sqrt(5))/4"),
      coeff(3.0 * (10.0 * s3 + pent), "3*(10*sqrt(3)+sqrt(25+10*sqrt(5)))")));
  {
    SolidRecord r = with(
        solid("rhombicosidodecahedron", A, {{{3, 20}, {4, 30}, {5, 12}}}, 62, 120, 60),
        coeff(std::sqrt(11.0 + 4.0 * s5) / 2.0, "sqrt(11+4*sqrt(5))/2"),
        coeff((60.0 + 29.0 * s5) / 3.0, "(60+29*sqrt(5))/3"),
        coeff(30.0 + 5.0 * s3 + 3.0 * pent, "30+5*sqrt(3)+3*sqrt(25+10*sqrt(5))"));
    r.roundness_note =
        "the often quoted 94% is not reproduced: the circumscribed-sphere "
        "volume ratio is 0.8923";
    out.push_back(std::move(r));
  }
  out.push_back(with(
      solid("truncated-icosidodecahedron", A, {{{4, 30}, {6, 20}, {10, 12}}}, 62, 180, 120),
      coeff(std::sqrt(31.0 + 12.0 * s5) / 2.0, "sqrt(31+12*sqrt(5))/2"),
      coeff(95.0 + 50.0 * s5, "95+50*sqrt(5)"),
      coeff(30.0 * (1.0 + s3 + std::sqrt(5.0 + 2.0 * s5)),
            "30*(1+sqrt(3)+sqrt(5+2*sqrt(5)))")));
  out.push_back(with(solid("snub-dodecahedron", A, {{{3, 80}, {5, 12}}}, 92, 150, 60),
                     std::nullopt, std::nullopt,
                     coeff(20.0 * s3 + 3.0 * pent, "20*sqrt(3)+3*sqrt(25+10*sqrt(5))")));
  return out;
}

const std::vector<std::pair<std::string_view, std::string_view>> kAliases = {
    {"hexahedron", "cube"},
    {"buckyball", "truncated-icosahedron"},
    {"c60", "truncated-icosahedron"},
    {"soccer-ball", "truncated-icosahedron"},
    {"soccerball", "truncated-icosahedron"},
    {"football", "truncated-icosahedron"},
    {"soccerene", "truncated-icosahedron"},
    {"small-rhombicuboctahedron", "rhombicuboctahedron"},
    {"great-rhombicuboctahedron", "truncated-cuboctahedron"},
    {"small-rhombicosidodecahedron", "rhombicosidodecahedron"},
    {"great-rhombicosidodecahedron", "truncated-icosidodecahedron"},
};

}  // namespace

const std::vector<SolidRecord>& catalog() {
  static const std::vector<SolidRecord> records = build_catalog();
  return records;
}

std::string normalize_solid_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (c == ' ' || c == '_') c = '-';
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (const auto& [alias, canonical] : kAliases) {
    if (out == alias) return std::string(canonical);
  }
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& r : catalog()) names.push_back(r.name);
  return names;
}

const SolidRecord& catalog_lookup(std::string_view name) {
  const std::string key = normalize_solid_name(name);
  for (const auto& r : catalog()) {
    if (r.name == key) return r;
  }
  throw LookupError(fmt::format("unknown solid '{}'; available: {}", name,
                                fmt::join(catalog_names(), ", ")));
}

}  // namespace polysphere
