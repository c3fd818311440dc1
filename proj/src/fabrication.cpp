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

#include "polysphere/fabrication.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "polysphere/errors.hpp"
#include "polysphere/polygon_metrics.hpp"

namespace polysphere {

void validate(const MaterialBudget& b) {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (b.balls < 1) throw DomainError("balls must be >= 1");
  if (!positive(b.sphere_diameter) || !positive(b.thread_available) ||
      b.pins_available < 1 || !positive(b.sheet_width) ||
      !positive(b.sheet_height) || !positive(b.stitch_multiplier)) {
    throw DomainError("material budget values must all be positive");
  }
  if (!(b.gap >= 0.0) || !(b.margin >= 0.0)) {
    throw DomainError("gap and margin must be >= 0");
  }
}

SeamReport seam_budget(const FaceInventory& inventory, double side,
                       const MaterialBudget& budget) {
  validate(budget);
  if (!(side >= 0.0)) throw DomainError("side must be >= 0");
  const FaceCounts counts = derive_counts(inventory);

  SeamReport r;
  r.balls = budget.balls;
  r.edges_per_ball = counts.edges;
  r.side = side;
  r.stitch_multiplier = budget.stitch_multiplier;
  r.seam_length =
      budget.balls * counts.edges * side * budget.stitch_multiplier;
  r.thread_available = budget.thread_available;
  r.thread_ok = r.seam_length <= budget.thread_available;
  r.pins_available = budget.pins_available;
  const int total_edges = budget.balls * counts.edges;
  r.pins_per_edge = total_edges > 0 ? budget.pins_available / total_edges : 0;
  return r;
}

std::string_view to_string(PanelColor color) {
  return color == PanelColor::kBlack ? "black" : "white";
}

ColorMap default_color_map(const FaceInventory& inventory) {
  ColorMap colors;
  for (const auto& [n, count] : inventory.entries) {
    colors[n] = n == 5 ? PanelColor::kBlack : PanelColor::kWhite;
  }
  return colors;
}

BoundingBox polygon_bounds(int sides, double side) {
  const auto pts = polygon_vertices({sides, side});
  BoundingBox box{pts.front(), pts.front()};
  for (const Vec2& p : pts) {
    box.min = {std::min(box.min.x, p.x), std::min(box.min.y, p.y)};
    box.max = {std::max(box.max.x, p.x), std::max(box.max.y, p.y)};
  }
  return box;
}

std::vector<Vec2> placed_outline(const TemplateSheet& sheet,
                                 const Placement& placement) {
  const BoundingBox box = polygon_bounds(placement.sides, sheet.side);
  const Vec2 centre = 0.5 * (box.min + box.max);
  const double c = std::cos(placement.rotation);
  const double s = std::sin(placement.rotation);

  std::vector<Vec2> out;
  for (const Vec2& p : polygon_vertices({placement.sides, sheet.side})) {
    const Vec2 d = p - centre;
    const Vec2 turned =
        placement.rotation == 0.0 ? d : Vec2{c * d.x - s * d.y, s * d.x + c * d.y};
    out.push_back(placement.position + (turned + centre - box.min));
  }
  return out;
}

namespace {

std::string label_prefix(int sides) {
  switch (sides) {
    case 3: return "T";
    case 4: return "S";
    case 5: return "P";
    case 6: return "H";
    case 8: return "O";
    case 10: return "D";
    default: return fmt::format("N{}-", sides);
  }
}

}  // namespace

std::vector<TemplateSheet> layout_templates(const FaceInventory& inventory,
                                            double side,
                                            const MaterialBudget& budget,
                                            const ColorMap& colors) {
  validate(budget);
  validate(inventory);
  if (!(side > 0.0)) throw DomainError("template side must be positive");
  for (const auto& [n, count] : inventory.entries) {
    if (!colors.contains(n)) {
      throw DomainError(fmt::format("no sheet colour for {}s", polygon_name(n)));
    }
  }

  const double usable_w = budget.sheet_width - 2.0 * budget.margin;
  const double usable_h = budget.sheet_height - 2.0 * budget.margin;

  std::vector<TemplateSheet> sheets;
  for (PanelColor color : {PanelColor::kBlack, PanelColor::kWhite}) {
    TemplateSheet* sheet = nullptr;
    int sheet_count = 0;
    double cursor_x = 0.0;
    double shelf_y = 0.0;
    double shelf_h = 0.0;

    auto open_sheet = [&] {
      TemplateSheet s;
      s.color = color;
      s.index = ++sheet_count;
      s.width = budget.sheet_width;
      s.height = budget.sheet_height;
      s.side = side;
      sheets.push_back(std::move(s));
      sheet = &sheets.back();
      cursor_x = budget.margin;
      shelf_y = budget.margin;
      shelf_h = 0.0;
    };

    for (const auto& [n, count] : inventory.entries) {
      if (colors.at(n) != color) continue;
      const BoundingBox box = polygon_bounds(n, side);
      const double w = box.width();
      const double h = box.height();
      if (w > usable_w || h > usable_h) {
        throw LayoutError(fmt::format(
            "{} with side {:.3f} cm needs {:.3f} x {:.3f} cm but the sheet "
            "leaves {:.3f} x {:.3f} cm inside its margin",
            polygon_name(n), side, w, h, usable_w, usable_h));
      }

      const int copies = budget.balls * count;
      for (int i = 0; i < copies; ++i) {
        if (sheet == nullptr) open_sheet();
        if (cursor_x + w > budget.sheet_width - budget.margin) {
          shelf_y += shelf_h + budget.gap;
          cursor_x = budget.margin;
          shelf_h = 0.0;
        }
        if (shelf_y + h > budget.sheet_height - budget.margin) open_sheet();

        sheet->placements.push_back(
            {n, fmt::format("{}{:02}", label_prefix(n), i + 1),
             {cursor_x, shelf_y}, 0.0});
        cursor_x += w + budget.gap;
        shelf_h = std::max(shelf_h, h);
      }
    }
  }
  return sheets;
}

bool verify_sheet(const TemplateSheet& sheet, double margin) {
  constexpr double kSlack = 1e-9;
  std::vector<BoundingBox> boxes;
  for (const Placement& p : sheet.placements) {
    const auto outline = placed_outline(sheet, p);
    BoundingBox b{outline.front(), outline.front()};
    for (const Vec2& q : outline) {
      b.min = {std::min(b.min.x, q.x), std::min(b.min.y, q.y)};
      b.max = {std::max(b.max.x, q.x), std::max(b.max.y, q.y)};
    }
    if (b.min.x < margin - kSlack || b.min.y < margin - kSlack ||
        b.max.x > sheet.width - margin + kSlack ||
        b.max.y > sheet.height - margin + kSlack) {
      return false;
    }
    boxes.push_back(b);
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      const bool separate = boxes[i].max.x <= boxes[j].min.x + kSlack ||
                            boxes[j].max.x <= boxes[i].min.x + kSlack ||
                            boxes[i].max.y <= boxes[j].min.y + kSlack ||
                            boxes[j].max.y <= boxes[i].min.y + kSlack;
      if (!separate) return false;
    }
  }
  return true;
}

namespace {

// cm -> mm, fixed 3 decimals, never "-0.000".
std::string mm(double cm) {
  std::string s = fmt::format("{:.3f}", cm * 10.0);
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string render_svg(const TemplateSheet& sheet) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"{0}mm\" height=\"{1}mm\" viewBox=\"0 0 {0} {1}\">\n",
      mm(sheet.width), mm(sheet.height));
  out += fmt::format("  <title>{} sheet {}: {} cut-outs, side {} mm</title>\n",
                     to_string(sheet.color), sheet.index,
                     sheet.placements.size(), mm(sheet.side));
  for (const Placement& p : sheet.placements) {
    const auto outline = placed_outline(sheet, p);
    std::string d;
    Vec2 centre{};
    for (std::size_t i = 0; i < outline.size(); ++i) {
      d += fmt::format("{}{} {} ", i == 0 ? "M " : "L ", mm(outline[i].x),
                       mm(outline[i].y));
      centre = centre + outline[i];
    }
    d += "Z";
    centre = (1.0 / outline.size()) * centre;
    out += fmt::format(
        "  <path id=\"{}\" d=\"{}\" fill=\"none\" stroke=\"#000000\" "
        "stroke-width=\"0.3\"/>\n",
        p.id, d);
    out += fmt::format(
        "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"4\" "
        "text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>\n",
        mm(centre.x), mm(centre.y), p.id);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace polysphere
