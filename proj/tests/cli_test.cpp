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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "golden_util.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = polysphere::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path(testing::TempDir()) / ("polysphere_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(CliCatalog, JsonListsAllSolids) {
  const CliRun r = run({"catalog", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 18u);
  for (const auto& rec : j) EXPECT_TRUE(rec.at("euler").get<bool>()) << rec.at("name");
  EXPECT_EQ(r.out, golden("catalog.json", r.out));
}

TEST(CliCatalog, SingleSolid) {
  const CliRun r = run({"catalog", "--solid", "truncated-icosahedron", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("name"), "truncated-icosahedron");
  EXPECT_NEAR(j.at("circumsphere_volume_ratio").get<double>(), 0.8674, 1e-4);
  EXPECT_EQ(j.at("edges"), 90);
}

TEST(CliCatalog, TextFlagsRhombicosidodecahedronFigure) {
  const CliRun r = run({"catalog"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.8923"), std::string::npos);
  EXPECT_NE(r.out.find("94%"), std::string::npos);
}

TEST(CliCatalog, UnknownSolid) {
  const CliRun r = run({"catalog", "--solid", "nosuch"});
  EXPECT_NE(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("rhombicosidodecahedron"), std::string::npos);
}

TEST(CliSolve, DefaultBallText) {
  const CliRun r = run({"solve", "--diameter", "25", "--solid", "truncated-icosahedron",
                     "--method", "surface-match"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("27.04 cm^2   (~ 27 cm^2)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(~ 5.2 cm)"), std::string::npos) << r.out;
}

TEST(CliSolve, MethodsJson) {
  const json sm = json::parse(run({"solve", "--format", "json"}).out);
  EXPECT_NEAR(sm.at("side").get<double>(), 5.2002586, 1e-6);
  EXPECT_EQ(sm.at("side_rounded").get<double>(), 5.2);
  EXPECT_EQ(sm.at("side_sq_rounded").get<double>(), 27.0);

  const json in = json::parse(run({"solve", "--method", "inscribed", "--format", "json"}).out);
  EXPECT_EQ(in.at("method"), "inscribed-fit");
  EXPECT_NEAR(in.at("side").get<double>(), 5.0443527, 1e-6);

  const CliRun cmp = run({"solve", "--method", "compare", "--format", "json"});
  const json c = json::parse(cmp.out);
  EXPECT_NEAR(c.at("side_ratio").get<double>(), 1.0309, 1e-4);
  EXPECT_EQ(c.at("sphere").at("radius"), 12.5);
  for (const char* key : {"solid", "surface_match", "inscribed_fit", "flat_deficit"}) {
    EXPECT_TRUE(c.contains(key)) << key;
  }
  EXPECT_EQ(cmp.out, golden("compare.json", cmp.out));
}

TEST(CliSolve, WritesToDirectory) {
  const fs::path dir = fresh_dir("solve");
  const CliRun r = run({"solve", "--format", "json", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "solution.json"));
}

TEST(CliSolve, UsageErrors) {
  EXPECT_NE(run({"solve", "--radius", "12.5", "--diameter", "25"}).code, 0);
  EXPECT_NE(run({"solve", "--radius", "-1"}).code, 0);
  EXPECT_NE(run({"solve", "--radius", "0"}).code, 0);
  EXPECT_NE(run({"solve", "--method", "bogus"}).code, 0);
  EXPECT_NE(run({}).code, 0);
  const CliRun snub = run({"solve", "--solid", "snub-cube", "--method", "inscribed"});
  EXPECT_EQ(snub.code, 1);
  EXPECT_NE(snub.err.find("circumradius"), std::string::npos);
}

TEST(CliTemplate, TwoBalls) {
  const fs::path dir = fresh_dir("template2");
  const CliRun r = run({"template", "--out", dir.string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json m = json::parse(r.out);
  EXPECT_EQ(m.at("totals").at("6"), 40);
  EXPECT_EQ(m.at("totals").at("5"), 24);

  const json seam = json::parse(read_file((dir / "seam_report.json").string()));
  EXPECT_NEAR(seam.at("seam_length").get<double>(), 936.0, 0.1);
  EXPECT_EQ(seam.at("pins_per_edge"), 11);
  EXPECT_TRUE(seam.at("thread_ok").get<bool>());

  EXPECT_EQ(read_file((dir / "sheet-black-01.svg").string()),
            read_file(golden_path("sheet-black-01.svg")));
  EXPECT_EQ(read_file((dir / "sheet-white-01.svg").string()),
            read_file(golden_path("sheet-white-01.svg")));
}

TEST(CliTemplate, OneBall) {
  const fs::path dir = fresh_dir("template1");
  const json m = json::parse(run({"template", "--balls", "1", "--out", dir.string(),
                                  "--format", "json"}).out);
  EXPECT_EQ(m.at("totals").at("6"), 20);
  EXPECT_EQ(m.at("totals").at("5"), 12);
}

TEST(CliTemplate, Errors) {
  EXPECT_NE(run({"template", "--radius", "0", "--out", fresh_dir("t0").string()}).code, 0);

  // A regular file where the output directory should go.
  const fs::path blocker = fresh_dir("blocker");
  std::ofstream(blocker) << "x";
  const CliRun r = run({"template", "--out", (blocker / "sub").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("cannot create output directory"), std::string::npos);

  const CliRun small = run({"template", "--sheet-w", "5", "--sheet-h", "5",
                         "--out", fresh_dir("tsmall").string()});
  EXPECT_EQ(small.code, 1);
  EXPECT_NE(small.err.find("pentagon"), std::string::npos);
}

TEST(CliMesh, Defaults) {
  const fs::path dir = fresh_dir("mesh");
  const CliRun r = run({"mesh", "--out", dir.string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("vertices"), 60);
  EXPECT_EQ(j.at("faces"), 32);
  EXPECT_EQ(j.at("groups").at("pentagons"), 12);
  EXPECT_EQ(read_file((dir / "truncated-icosahedron.obj").string()),
            read_file(golden_path("truncated-icosahedron-r12.5.obj")));
}

TEST(CliMesh, UnitEdgeHeader) {
  const fs::path dir = fresh_dir("mesh1");
  ASSERT_EQ(run({"mesh", "--scale-edge", "1", "--out", dir.string()}).code, 0);
  const std::string obj = read_file((dir / "truncated-icosahedron.obj").string());
  EXPECT_NE(obj.find("circumradius 2.478019 cm"), std::string::npos);
}

TEST(CliMesh, Errors) {
  const CliRun octa = run({"mesh", "--solid", "octahedron", "--out", fresh_dir("octa").string()});
  EXPECT_EQ(octa.code, 1);
  EXPECT_NE(octa.err.find("no coordinate construction"), std::string::npos);
  EXPECT_NE(run({"mesh", "--scale-edge", "1", "--scale-radius", "2", "--out",
                 fresh_dir("both").string()}).code, 0);
}

}  // namespace
