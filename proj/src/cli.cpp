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

#include "polysphere/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "polysphere/edge_solver.hpp"
#include "polysphere/errors.hpp"
#include "polysphere/fabrication.hpp"
#include "polysphere/mesh_export.hpp"
#include "polysphere/polygon_metrics.hpp"
#include "polysphere/reports.hpp"
#include "polysphere/solid_catalog.hpp"

namespace polysphere {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Format { kText, kJson };
enum class Method { kSurfaceMatch, kInscribed, kCompare };

struct RunConfig {
  std::string solid = "truncated-icosahedron";
  std::optional<double> radius;
  std::optional<double> diameter;
  Method method = Method::kSurfaceMatch;
  Format format = Format::kText;
  std::string out_dir;
  MaterialBudget budget;
  std::optional<double> scale_edge;
  std::optional<double> scale_radius;

  SphereSpec sphere() const {
    if (radius) return {*radius};
    return SphereSpec::from_diameter(diameter.value_or(25.0));
  }
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_format(CLI::App* cmd, RunConfig& cfg) {
  const std::map<std::string, Format> formats{{"text", Format::kText},
                                              {"json", Format::kJson}};
  cmd->add_option("--format", cfg.format, "Output format: text or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_sphere(CLI::App* cmd, RunConfig& cfg) {
  auto* r = cmd->add_option("--radius", cfg.radius, "Sphere radius in cm")
                ->check(CLI::PositiveNumber);
  auto* d = cmd->add_option("--diameter", cfg.diameter,
                            "Sphere diameter in cm (default 25)")
                ->check(CLI::PositiveNumber);
  r->excludes(d);
}

void add_solid(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--solid", cfg.solid, "Catalog solid name")
      ->capture_default_str();
}

fs::path prepare_dir(const std::string& dir) {
  const fs::path path = dir.empty() ? fs::path(".") : fs::path(dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec || !fs::is_directory(path)) {
    throw IoError(fmt::format("cannot create output directory '{}'", path.string()));
  }
  return path;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  file << content;
  file.close();
  if (!file) throw IoError(fmt::format("cannot write '{}'", path.string()));
}

std::string ratio_cell(const SolidRecord& r) {
  if (!r.volume_coeff || !r.circumradius_coeff) return "-";
  return fmt::format("{:.4f}", circumsphere_volume_ratio(r));
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  std::vector<const SolidRecord*> records;
  if (cfg.solid.empty()) {
    for (const auto& r : catalog()) records.push_back(&r);
  } else {
    records.push_back(&catalog_lookup(cfg.solid));
  }

  if (cfg.format == Format::kJson) {
    json list = json::array();
    for (const auto* r : records) list.push_back(to_json(*r));
    out << (cfg.solid.empty() ? list : list.front()).dump(2) << "\n";
    return 0;
  }

  out << fmt::format("{:<28} {:<12} {:>4} {:>4} {:>4}  {:<5} {:>8}\n", "solid",
                     "family", "F", "E", "V", "euler", "vol/sph");
  for (const auto* r : records) {
    out << fmt::format("{:<28} {:<12} {:>4} {:>4} {:>4}  {:<5} {:>8}\n", r->name,
                       to_string(r->family), r->faces, r->edges, r->vertices,
                       euler_check(*r) ? "ok" : "FAIL", ratio_cell(*r));
  }
  for (const auto* r : records) {
    if (r->roundness_note) out << fmt::format("note: {}: {}\n", r->name, *r->roundness_note);
  }
  return 0;
}

void print_solution(std::ostream& out, const EdgeSolution& s,
                    const FaceInventory& inventory) {
  out << fmt::format("method          {}\n", to_string(s.method));
  out << fmt::format("x^2             {:.2f} cm^2   (~ {:.0f} cm^2)\n", s.side_sq,
                     s.side_sq);
  out << fmt::format("x               {:.4f} cm    (~ {:.1f} cm)\n", s.side, s.side);
  for (const auto& [n, area] : s.coverage) {
    out << fmt::format("  {:<13} {:>3} x {:>9.3f} cm^2 = {:.1f} cm^2\n",
                       polygon_plural(n), inventory.entries.at(n),
                       area / inventory.entries.at(n), area);
  }
  out << fmt::format("flat total      {:.3f} cm^2\n", s.flat_total);
  out << fmt::format("flat / sphere   {:.4f}\n", s.flat_to_sphere_ratio);
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const SolidRecord& solid = catalog_lookup(cfg.solid);
  const SphereSpec sphere = cfg.sphere();

  json report;
  std::string text;
  {
    std::ostringstream t;
    t << fmt::format("solid           {}\n", solid.name);
    t << fmt::format("sphere          r = {:g} cm, d = {:g} cm, S = 4 pi r^2 = {:.3f} cm^2\n",
                     sphere.radius, sphere.diameter(), sphere_surface(sphere));
    switch (cfg.method) {
      case Method::kSurfaceMatch: {
        const auto s = surface_match_edge(sphere, solid.inventory);
        report = to_json(s);
        report["solid"] = solid.name;
        report["sphere"] = {{"radius", sphere.radius}};
        print_solution(t, s, solid.inventory);
        break;
      }
      case Method::kInscribed: {
        const auto s = inscribed_fit_edge(sphere, solid);
        report = to_json(s);
        report["solid"] = solid.name;
        report["sphere"] = {{"radius", sphere.radius}};
        print_solution(t, s, solid.inventory);
        break;
      }
      case Method::kCompare: {
        const auto c = compare_methods(sphere, solid);
        report = to_json(c);
        print_solution(t, c.surface_match, solid.inventory);
        print_solution(t, c.inscribed_fit, solid.inventory);
        t << fmt::format("side ratio      {:.4f} (surface-match / inscribed-fit)\n",
                         c.side_ratio);
        t << fmt::format("flat deficit    {:.3f} cm^2 (inscribed fit)\n",
                         c.flat_deficit);
        break;
      }
    }
    text = t.str();
  }

  const std::string body = cfg.format == Format::kJson ? report.dump(2) + "\n" : text;
  if (!cfg.out_dir.empty()) {
    const fs::path dir = prepare_dir(cfg.out_dir);
    const fs::path file =
        dir / (cfg.format == Format::kJson ? "solution.json" : "solution.txt");
    write_file(file, body);
    out << file.string() << "\n";
  } else {
    out << body;
  }
  return 0;
}

int cmd_template(const RunConfig& cfg, std::ostream& out) {
  const SolidRecord& solid = catalog_lookup(cfg.solid);
  const SphereSpec sphere = cfg.sphere();
  MaterialBudget budget = cfg.budget;
  budget.sphere_diameter = sphere.diameter();

  const EdgeSolution solution = cfg.method == Method::kInscribed
                                    ? inscribed_fit_edge(sphere, solid)
                                    : surface_match_edge(sphere, solid.inventory);
  const auto sheets = layout_templates(solid.inventory, solution.side, budget,
                                       default_color_map(solid.inventory));
  const SeamReport seam = seam_budget(solid.inventory, solution.side, budget);

  const fs::path dir = prepare_dir(cfg.out_dir);
  json manifest = {{"files", json::array()}};
  std::map<int, int> totals;
  std::string text;
  for (const auto& sheet : sheets) {
    const fs::path file =
        dir / fmt::format("sheet-{}-{:02}.svg", to_string(sheet.color), sheet.index);
    write_file(file, render_svg(sheet));

    std::map<int, int> counts;
    for (const auto& p : sheet.placements) ++counts[p.sides];
    json entry = {{"path", file.string()}, {"color", std::string(to_string(sheet.color))}};
    std::string summary;
    for (const auto& [n, c] : counts) {
      entry["placements"][std::to_string(n)] = c;
      totals[n] += c;
      summary += fmt::format(" {} {}", c, polygon_plural(n));
    }
    manifest["files"].push_back(entry);
    text += fmt::format("{}:{}\n", file.string(), summary);
  }

  json seam_json = to_json(seam);
  seam_json["solid"] = solid.name;
  seam_json["method"] = std::string(to_string(solution.method));
  const fs::path seam_file = dir / "seam_report.json";
  write_file(seam_file, seam_json.dump(2) + "\n");
  manifest["seam_report"] = seam_file.string();
  manifest["side"] = solution.side;
  for (const auto& [n, c] : totals) manifest["totals"][std::to_string(n)] = c;

  if (cfg.format == Format::kJson) {
    out << manifest.dump(2) << "\n";
    return 0;
  }
  out << text;
  out << fmt::format("{}: thread {:.1f} of {:.1f} cm ({}), {} pins per edge\n",
                     seam_file.string(), seam.seam_length, seam.thread_available,
                     seam.thread_ok ? "ok" : "SHORT", seam.pins_per_edge);
  return 0;
}

int cmd_mesh(const RunConfig& cfg, std::ostream& out) {
  const SolidRecord& solid = catalog_lookup(cfg.solid);
  MeshScale scale = MeshScale::by_circumradius(cfg.sphere().radius);
  if (cfg.scale_edge) scale = MeshScale::by_edge(*cfg.scale_edge);
  if (cfg.scale_radius) scale = MeshScale::by_circumradius(*cfg.scale_radius);

  const MeshModel mesh = build_solid_mesh(solid, scale);
  const fs::path dir = prepare_dir(cfg.out_dir);
  const fs::path file = dir / (solid.name + ".obj");
  write_file(file, export_obj(mesh));

  std::map<int, int> groups;
  for (int n : mesh.groups) ++groups[n];
  if (cfg.format == Format::kJson) {
    json j = {{"path", file.string()},
              {"vertices", mesh.vertices.size()},
              {"faces", mesh.faces.size()},
              {"edges", mesh.edge_count()}};
    for (const auto& [n, c] : groups) j["groups"][polygon_plural(n)] = c;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << fmt::format("{}: {} vertices, {} faces, {} edges\n", file.string(),
                     mesh.vertices.size(), mesh.faces.size(), mesh.edge_count());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Sphere-approximating polyhedra: edge solver, templates, meshes",
               "polysphere"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* catalog_cmd = app.add_subcommand("catalog", "List Platonic and Archimedean solids");
  std::string catalog_solid;
  catalog_cmd->add_option("--solid", catalog_solid, "Show a single solid");
  add_format(catalog_cmd, cfg);

  const std::map<std::string, Method> methods{{"surface-match", Method::kSurfaceMatch},
                                              {"inscribed", Method::kInscribed},
                                              {"inscribed-fit", Method::kInscribed},
                                              {"compare", Method::kCompare}};

  auto* solve_cmd = app.add_subcommand("solve", "Solve for the common polygon side");
  add_solid(solve_cmd, cfg);
  add_sphere(solve_cmd, cfg);
  solve_cmd->add_option("--method", cfg.method, "surface-match, inscribed or compare")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  solve_cmd->add_option("--out", cfg.out_dir, "Write the report into this directory");
  add_format(solve_cmd, cfg);

  auto* template_cmd = app.add_subcommand("template", "Write SVG cut templates and a seam report");
  add_solid(template_cmd, cfg);
  add_sphere(template_cmd, cfg);
  template_cmd->add_option("--method", cfg.method, "surface-match or inscribed")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  template_cmd->add_option("--balls", cfg.budget.balls, "Number of balls")
      ->check(CLI::PositiveNumber)->capture_default_str();
  template_cmd->add_option("--sheet-w", cfg.budget.sheet_width, "Sheet width, cm")
      ->check(CLI::PositiveNumber)->capture_default_str();
  template_cmd->add_option("--sheet-h", cfg.budget.sheet_height, "Sheet height, cm")
      ->check(CLI::PositiveNumber)->capture_default_str();
  template_cmd->add_option("--gap", cfg.budget.gap, "Gap between cut-outs, cm")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  template_cmd->add_option("--margin", cfg.budget.margin, "Sheet margin, cm")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  template_cmd->add_option("--thread", cfg.budget.thread_available, "Thread on hand, cm")
      ->check(CLI::PositiveNumber)->capture_default_str();
  template_cmd->add_option("--pins", cfg.budget.pins_available, "Pins on hand")
      ->check(CLI::PositiveNumber)->capture_default_str();
  template_cmd->add_option("--stitch", cfg.budget.stitch_multiplier,
                           "Thread passes per edge")
      ->check(CLI::PositiveNumber)->capture_default_str();
  template_cmd->add_option("--out", cfg.out_dir, "Output directory")->required();
  add_format(template_cmd, cfg);

  auto* mesh_cmd = app.add_subcommand("mesh", "Write a Wavefront OBJ mesh");
  add_solid(mesh_cmd, cfg);
  add_sphere(mesh_cmd, cfg);
  auto* se = mesh_cmd->add_option("--scale-edge", cfg.scale_edge, "Edge length, cm")
                 ->check(CLI::PositiveNumber);
  auto* sr = mesh_cmd->add_option("--scale-radius", cfg.scale_radius,
                                  "Circumradius, cm (default: sphere radius)")
                 ->check(CLI::PositiveNumber);
  se->excludes(sr);
  mesh_cmd->add_option("--out", cfg.out_dir, "Output directory")->required();
  add_format(mesh_cmd, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (catalog_cmd->parsed()) {
      cfg.solid = catalog_solid;
      return cmd_catalog(cfg, out);
    }
    if (solve_cmd->parsed()) return cmd_solve(cfg, out);
    if (template_cmd->parsed()) return cmd_template(cfg, out);
    if (mesh_cmd->parsed()) return cmd_mesh(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace polysphere
