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
#include <string>
#include <string_view>
#include <vector>

#include "polysphere/solid_catalog.hpp"
#include "polysphere/vec.hpp"

namespace polysphere {

/// Materials on hand for a build. Defaults describe two 25 cm balls with
/// 50 m of thread and 2000 pins; sheet size, gap and margin are layout
/// choices.
struct MaterialBudget {
  int balls = 2;
  double sphere_diameter = 25.0;     // cm
  double thread_available = 5000.0;  // cm
  int pins_available = 2000;
  double sheet_width = 100.0;  // cm, same for every colour
  double sheet_height = 70.0;  // cm
  double gap = 0.5;            // cm between neighbouring cut-outs
  double margin = 1.0;         // cm kept clear along the sheet border
  double stitch_multiplier = 1.0;  // thread passes per edge
};

/// Throws DomainError on non-positive counts or lengths.
void validate(const MaterialBudget& budget);

struct SeamReport {
  int balls = 0;
  int edges_per_ball = 0;
  double side = 0.0;
  double stitch_multiplier = 1.0;
  double seam_length = 0.0;  // cm of thread needed for all balls
  double thread_available = 0.0;
  bool thread_ok = false;
  int pins_available = 0;
  int pins_per_edge = 0;
};

/// Thread and pin budget: one thread pass per edge (scaled by the stitch
/// multiplier), pins spread evenly over all edges of all balls.
SeamReport seam_budget(const FaceInventory& inventory, double side,
                       const MaterialBudget& budget);

enum class PanelColor { kBlack, kWhite };

std::string_view to_string(PanelColor color);

using ColorMap = std::map<int, PanelColor>;

/// Black pentagons, everything else white.
ColorMap default_color_map(const FaceInventory& inventory);

struct Placement {
  int sides = 0;
  std::string id;     // label printed on the template, e.g. "H07"
  Vec2 position;      // lower-left corner of the bounding box, sheet cm
  double rotation = 0.0;  // radians about the bounding-box centre
};

struct TemplateSheet {
  PanelColor color = PanelColor::kWhite;
  int index = 1;  // 1-based within its colour
  double width = 0.0;
  double height = 0.0;
  double side = 0.0;  // polygon side length shared by every cut-out
  std::vector<Placement> placements;
};

struct BoundingBox {
  Vec2 min;
  Vec2 max;
  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
};

/// Bounding box of the canonically oriented n-gon.
BoundingBox polygon_bounds(int sides, double side);

/// Outline of a placed cut-out in sheet coordinates (cm).
std::vector<Vec2> placed_outline(const TemplateSheet& sheet,
                                 const Placement& placement);

/// Shelf-packs balls × c_n copies of each face type onto sheets of the
/// mapped colour, black sheets first. Throws LayoutError if a cut-out does
/// not fit on an empty sheet, DomainError if a face type has no colour.
std::vector<TemplateSheet> layout_templates(const FaceInventory& inventory,
                                            double side,
                                            const MaterialBudget& budget,
                                            const ColorMap& colors);

/// Every cut-out is inside the margin and no two bounding boxes overlap.
bool verify_sheet(const TemplateSheet& sheet, double margin);

/// SVG 1.1 document, 1 user unit = 1 mm, coordinates at 3 decimals.
std::string render_svg(const TemplateSheet& sheet);

}  // namespace polysphere
