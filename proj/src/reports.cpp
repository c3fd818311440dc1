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

#include "polysphere/reports.hpp"

#include <cmath>
#include <string>

namespace polysphere {

using nlohmann::json;

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

namespace {

json coefficient(const Coefficient& c) {
  return {{"value", c.value}, {"expression", c.expression}};
}

}  // namespace

json to_json(const SolidRecord& record) {
  json inventory = json::object();
  for (const auto& [n, count] : record.inventory.entries) {
    inventory[std::to_string(n)] = count;
  }
  json j = {
      {"name", record.name},
      {"family", std::string(to_string(record.family))},
      {"inventory", inventory},
      {"faces", record.faces},
      {"edges", record.edges},
      {"vertices", record.vertices},
      {"euler", euler_check(record)},
  };
  if (record.circumradius_coeff) {
    j["circumradius_coeff"] = coefficient(*record.circumradius_coeff);
  }
  if (record.volume_coeff) j["volume_coeff"] = coefficient(*record.volume_coeff);
  if (record.surface_coeff) j["surface_coeff"] = coefficient(*record.surface_coeff);
  if (record.volume_coeff && record.circumradius_coeff) {
    j["circumsphere_volume_ratio"] = circumsphere_volume_ratio(record);
  }
  if (record.roundness_note) j["roundness_note"] = *record.roundness_note;
  return j;
}

json to_json(const EdgeSolution& s) {
  json coverage = json::object();
  for (const auto& [n, area] : s.coverage) coverage[std::to_string(n)] = area;
  return {
      {"method", std::string(to_string(s.method))},
      {"side", s.side},
      {"side_sq", s.side_sq},
      {"side_rounded", round_to(s.side, 1)},
      {"side_sq_rounded", round_to(s.side_sq, 0)},
      {"coverage", coverage},
      {"flat_total", s.flat_total},
      {"sphere_surface", s.sphere_surface},
      {"flat_to_sphere_ratio", s.flat_to_sphere_ratio},
  };
}

json to_json(const MethodComparison& c) {
  return {
      {"sphere", {{"radius", c.sphere.radius}}},
      {"solid", c.solid},
      {"surface_match", to_json(c.surface_match)},
      {"inscribed_fit", to_json(c.inscribed_fit)},
      {"side_ratio", c.side_ratio},
      {"flat_deficit", c.flat_deficit},
  };
}

json to_json(const SeamReport& r) {
  return {
      {"balls", r.balls},
      {"edges_per_ball", r.edges_per_ball},
      {"side", r.side},
      {"stitch_multiplier", r.stitch_multiplier},
      {"seam_length", r.seam_length},
      {"thread_available", r.thread_available},
      {"thread_ok", r.thread_ok},
      {"pins_available", r.pins_available},
      {"pins_per_edge", r.pins_per_edge},
  };
}

}  // namespace polysphere
