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

#include "polysphere/mesh_export.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include <fmt/format.h>

#include "polysphere/errors.hpp"
#include "polysphere/polygon_metrics.hpp"

namespace polysphere {

int MeshModel::edge_count() const {
  std::set<std::pair<int, int>> edges;
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i];
      const int b = f[(i + 1) % f.size()];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  return static_cast<int>(edges.size());
}

namespace {

Vec3 centroid_of(const std::vector<Vec3>& pts) {
  Vec3 c{};
  for (const Vec3& p : pts) c = c + p;
  return (1.0 / pts.size()) * c;
}

// Newell normal (length = twice the face area) and centroid of a face.
std::pair<Vec3, Vec3> face_frame(const std::vector<Vec3>& verts,
                                 const std::vector<int>& face) {
  Vec3 normal{};
  Vec3 centre{};
  for (std::size_t i = 0; i < face.size(); ++i) {
    const Vec3& a = verts[face[i]];
    const Vec3& b = verts[face[(i + 1) % face.size()]];
    normal = normal + cross(a, b);
    centre = centre + a;
  }
  return {normal, (1.0 / face.size()) * centre};
}

double planarity_error(const std::vector<Vec3>& verts,
                       const std::vector<int>& face) {
  const auto [normal, centre] = face_frame(verts, face);
  const Vec3 unit = normalized(normal);
  double worst = 0.0;
  for (int i : face) worst = std::max(worst, std::abs(dot(unit, verts[i] - centre)));
  return worst;
}

double shortest_pair(const std::vector<Vec3>& verts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      best = std::min(best, distance(verts[i], verts[j]));
    }
  }
  return best;
}

// Neighbours of each vertex, sorted counterclockwise as seen from outside.
std::vector<std::vector<int>> rotation_system(const std::vector<Vec3>& verts,
                                              double edge) {
  const double tol = 1e-7 * edge;
  const Vec3 centre = centroid_of(verts);
  std::vector<std::vector<int>> around(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const Vec3 axis = normalized(verts[v] - centre);
    // Any vector not parallel to the axis seeds the tangent frame.
    const Vec3 seed = std::abs(axis.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 u = normalized(cross(axis, seed));
    const Vec3 w = cross(axis, u);

    std::vector<std::pair<double, int>> ring;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (j == v || std::abs(distance(verts[v], verts[j]) - edge) > tol) continue;
      const Vec3 d = verts[j] - verts[v];
      ring.emplace_back(std::atan2(dot(d, w), dot(d, u)), static_cast<int>(j));
    }
    std::sort(ring.begin(), ring.end());
    for (const auto& [angle, j] : ring) around[v].push_back(j);
  }
  return around;
}

}  // namespace

MeshModel build_solid_mesh(const SolidRecord& solid, MeshScale scale) {
  if (!(scale.value > 0.0) || !std::isfinite(scale.value)) {
    throw DomainError(fmt::format("mesh scale must be positive, got {}", scale.value));
  }
  MeshModel mesh;
  mesh.name = solid.name;
  mesh.vertices = unit_edge_vertices(solid.name);

  double factor = scale.value;
  if (scale.kind == MeshScale::Kind::kCircumradius) {
    double radius = 0.0;
    for (const Vec3& p : mesh.vertices) radius = std::max(radius, norm(p));
    factor = scale.value / radius;
  }
  for (Vec3& p : mesh.vertices) p = factor * p;

  const double edge = shortest_pair(mesh.vertices);
  const auto around = rotation_system(mesh.vertices, edge);

  // Walk each directed edge once. Arriving at `cur` from `prev`, the face on
  // the left continues to the neighbour just clockwise of `prev`.
  std::set<std::pair<int, int>> used;
  for (int start = 0; start < static_cast<int>(mesh.vertices.size()); ++start) {
    for (int first : around[start]) {
      if (used.contains({start, first})) continue;
      std::vector<int> face;
      int prev = start;
      int cur = first;
      face.push_back(start);
      used.insert({start, first});
      while (cur != start) {
        if (face.size() > mesh.vertices.size()) {
          throw GeometryError(fmt::format("face walk on {} did not close", solid.name));
        }
        face.push_back(cur);
        const auto& ring = around[cur];
        const auto it = std::find(ring.begin(), ring.end(), prev);
        const int next = it == ring.begin() ? ring.back() : *std::prev(it);
        used.insert({cur, next});
        prev = cur;
        cur = next;
      }
      if (face.size() < 3) {
        throw GeometryError(fmt::format("degenerate face on {}", solid.name));
      }
      if (planarity_error(mesh.vertices, face) > 1e-7 * edge) {
        throw GeometryError(fmt::format(
            "recovered {}-vertex face on {} is not planar", face.size(), solid.name));
      }
      mesh.groups.push_back(static_cast<int>(face.size()));
      mesh.faces.push_back(std::move(face));
    }
  }
  validate(mesh);
  return mesh;
}

void validate(const MeshModel& mesh, double planarity_tol) {
  const int nv = static_cast<int>(mesh.vertices.size());
  if (mesh.faces.size() != mesh.groups.size()) {
    throw GeometryError("mesh face and group lists differ in length");
  }
  if (nv < 4 || mesh.faces.size() < 4) throw GeometryError("mesh is too small");

  const double edge = shortest_pair(mesh.vertices);
  const Vec3 centre = centroid_of(mesh.vertices);
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& face = mesh.faces[f];
    const std::set<int> distinct(face.begin(), face.end());
    if (face.size() < 3 || distinct.size() != face.size()) {
      throw GeometryError(fmt::format("face {} needs >= 3 distinct vertices", f));
    }
    if (*distinct.begin() < 0 || *distinct.rbegin() >= nv) {
      throw GeometryError(fmt::format("face {} has an out-of-range index", f));
    }
    if (mesh.groups[f] != static_cast<int>(face.size())) {
      throw GeometryError(fmt::format("face {} is grouped with the wrong n-gons", f));
    }
    if (planarity_error(mesh.vertices, face) >= planarity_tol * edge) {
      throw GeometryError(fmt::format("face {} is not planar", f));
    }
    const auto [normal, face_centre] = face_frame(mesh.vertices, face);
    if (dot(normal, face_centre - centre) <= 0.0) {
      throw GeometryError(fmt::format("face {} winds inward", f));
    }
  }
  const int chi = nv - mesh.edge_count() + static_cast<int>(mesh.faces.size());
  if (chi != 2) {
    throw GeometryError(fmt::format("mesh Euler characteristic is {}, not 2", chi));
  }
}

namespace {

std::string fixed6(double v) {
  std::string s = fmt::format("{:.6f}", v);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::string export_obj(const MeshModel& mesh) {
  double edge = shortest_pair(mesh.vertices);
  const Vec3 centre = centroid_of(mesh.vertices);
  double radius = 0.0;
  for (const Vec3& p : mesh.vertices) radius = std::max(radius, distance(p, centre));

  std::string out;
  out += fmt::format("# {}\n", mesh.name);
  out += fmt::format("# vertices {}, faces {}, edges {}\n", mesh.vertices.size(),
                     mesh.faces.size(), mesh.edge_count());
  out += fmt::format("# edge {} cm, circumradius {} cm\n", fixed6(edge),
                     fixed6(radius));
  for (const Vec3& p : mesh.vertices) {
    out += fmt::format("v {} {} {}\n", fixed6(p.x), fixed6(p.y), fixed6(p.z));
  }

  const std::set<int> kinds(mesh.groups.begin(), mesh.groups.end());
  for (int n : kinds) {
    out += fmt::format("g {}\n", polygon_plural(n));
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
      if (mesh.groups[f] != n) continue;
      out += "f";
      for (int i : mesh.faces[f]) out += fmt::format(" {}", i + 1);
      out += "\n";
    }
  }
  return out;
}

MeshModel parse_obj(std::string_view text) {
  MeshModel mesh;
  std::istringstream in{std::string(text)};
  std::string line;
  std::string group;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "v") {
      Vec3 p;
      if (!(fields >> p.x >> p.y >> p.z)) {
        throw GeometryError(fmt::format("bad vertex on OBJ line {}", line_no));
      }
      mesh.vertices.push_back(p);
    } else if (tag == "g") {
      fields >> group;
    } else if (tag == "f") {
      std::vector<int> face;
      std::string token;
      while (fields >> token) {
        face.push_back(std::stoi(token.substr(0, token.find('/'))) - 1);
      }
      mesh.groups.push_back(static_cast<int>(face.size()));
      mesh.faces.push_back(std::move(face));
      if (!group.empty() && polygon_plural(mesh.groups.back()) != group) {
        throw GeometryError(fmt::format(
            "OBJ line {}: {}-vertex face in group '{}'", line_no,
            mesh.groups.back(), group));
      }
    } else if (tag == "#" && mesh.name.empty() && mesh.vertices.empty()) {
      std::getline(fields >> std::ws, mesh.name);
    }
  }
  return mesh;
}

}  // namespace polysphere
