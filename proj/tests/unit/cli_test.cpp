#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "halfspace_tools/cli.hpp"
#include "test_support.hpp"

namespace halfspace::tools {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(HALFSPACE_CONFIG_DIR) + "/" + name; }

TEST(Cli, KernelEvalPoisson) {
  const auto r = run({"kernel-eval", "--n", "3", "--x", "0,0,1", "--yp", "0,0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "P = 0.159154943\n");
}

TEST(Cli, KernelEvalGreen) {
  const auto r = run({"kernel-eval", "--n", "3", "--x", "0,0,1", "--y", "0,0,2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("G = -0.0530516477\n"), std::string::npos);
  EXPECT_NE(r.out.find("bound = 0.318309886\n"), std::string::npos);
}

TEST(Cli, KernelEvalSingularity) {
  const auto r = run({"kernel-eval", "--n", "3", "--x", "0,0,1", "--y", "0,0,1"});
  EXPECT_EQ(r.code, kExitNumeric);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("singularity"), std::string::npos);
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run({}).code, kExitConfig);
  EXPECT_EQ(run({"kernel-eval", "--n", "3", "--x", "0,0"}).code, kExitConfig);
  EXPECT_EQ(run({"growth", "/nonexistent/file.conf"}).code, kExitConfig);
  const auto dir = testing::scratch_dir("cli-config");
  testing::write_text(dir / "bad.conf", "[params]\nn = 3\np = 2\ngamma = 9\nalpha = 1\n");
  const auto bad = run({"poisson", (dir / "bad.conf").string()});
  EXPECT_EQ(bad.code, kExitConfig);
  EXPECT_NE(bad.err.find("gamma"), std::string::npos);
  testing::write_text(dir / "typo.conf", "[params]\nn = 3\np = 1\ngamma = 3\nalpha = 3\n[ray]\ndirection = 0,0,1\n");
  EXPECT_EQ(run({"growth", (dir / "typo.conf").string()}).code, kExitConfig);
  testing::write_text(dir / "noseed.conf",
                      "[params]\nn = 3\np = 1\ngamma = 3\nalpha = 3\n[covering]\nsamples = 4\n");
  EXPECT_EQ(run({"cover", (dir / "noseed.conf").string()}).code, kExitConfig);
}

TEST(Cli, PoissonAndPotential) {
  const auto dir = testing::scratch_dir("cli-poisson");
  testing::write_text(dir / "mu.csv", "coord_1,coord_2,coord_3,mass\n0,0,2,1\n");
  testing::write_text(dir / "p.conf",
                      "[params]\nn = 3\np = 1\ngamma = 3\nalpha = 1.5\nmode = subharmonic\n"
                      "[boundary]\nkind = compact-bump\n[measure]\npath = mu.csv\n"
                      "[covering]\nseed = 1\n[evaluate]\npoints = 0,0,1; 0,0,2.5\n");
  const auto p = run({"poisson", (dir / "p.conf").string()});
  EXPECT_EQ(p.code, kExitOk) << p.err;
  EXPECT_NE(p.out.find("0,0,1,0.292893219,"), std::string::npos);
  const auto h = run({"potential", (dir / "p.conf").string(), "--x", "0,0,1"});
  EXPECT_EQ(h.code, kExitOk) << h.err;
  EXPECT_NE(h.out.find("0,0,1,-0.0530516477,0.318309886,0.292893219,"), std::string::npos);
  EXPECT_EQ(run({"potential", (dir / "p.conf").string(), "--x", "0,0,2"}).code, kExitNumeric);
}

TEST(Cli, CoverSingleAtomAtTheGate) {
  const auto out = testing::scratch_dir("cli-cover");
  const auto r = run({"cover", config("cover_single_atom.conf"), "--output", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(testing::read_file(out / "cover.json"));
  EXPECT_EQ(j["certified_bound"].get<double>(), 3.0);
  EXPECT_LE(j["budget"].get<double>(), 3.0);
  EXPECT_FALSE(j["balls"].empty());
}

TEST(Cli, CoverEmptyAndLadder) {
  const auto out = testing::scratch_dir("cli-cover2");
  ASSERT_EQ(run({"cover", config("cover_empty.conf"), "--output", out.string()}).code, kExitOk);
  auto j = nlohmann::json::parse(testing::read_file(out / "exceptional_set.json"));
  EXPECT_EQ(j["ball_count"].get<int>(), 0);
  for (const auto& b : j["bands"]) EXPECT_TRUE(b["cover"]["balls"].empty());

  ASSERT_EQ(run({"cover", config("cover_ladder.conf"), "--output", out.string()}).code, kExitOk);
  j = nlohmann::json::parse(testing::read_file(out / "exceptional_set.json"));
  ASSERT_EQ(j["bands"].size(), 8u);
  for (const auto& b : j["bands"]) {
    EXPECT_LE(b["cover"]["budget"].get<double>(), b["budget_limit"].get<double>());
    EXPECT_EQ(b["budget_limit"].get<double>(), std::ldexp(1.0, -b["index"].get<int>()));
  }
}

TEST(Cli, GrowthHarmonicCorner) {
  const auto out = testing::scratch_dir("cli-growth");
  const auto r = run({"growth", config("harmonic_corner.conf"), "--output", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto s = nlohmann::json::parse(testing::read_file(out / "summary.json"));
  EXPECT_TRUE(s["exceptional_set"]["finite_ball_path"].get<bool>());
  EXPECT_TRUE(s["all_witnessed"].get<bool>());
  EXPECT_EQ(s["rays"].size(), 5u);
  for (int i = 0; i < 5; ++i) EXPECT_TRUE(fs::exists(out / ("ray_" + std::to_string(i) + ".csv")));
  EXPECT_TRUE(fs::exists(out / "exceptional_set.json"));
}

TEST(Cli, GrowthLogBoundaryIsFlagged) {
  const auto out = testing::scratch_dir("cli-growth-log");
  const auto r = run({"growth", config("log_boundary.conf"), "--output", out.string()});
  const auto s = nlohmann::json::parse(testing::read_file(out / "summary.json"));
  EXPECT_TRUE(s["target"]["log_factor"].get<bool>());
  EXPECT_EQ(r.code, s["all_witnessed"].get<bool>() ? kExitOk : kExitTrend);
}

TEST(Cli, EmptyMeasureReducesToTheHarmonicPath) {
  const auto dir = testing::scratch_dir("cli-empty");
  testing::write_text(dir / "empty.csv", "coord_1,coord_2,coord_3,mass\n");
  const std::string base =
      "[params]\nn = 3\np = 1\ngamma = 3\nalpha = 1.5\n[boundary]\nkind = compact-bump\n"
      "[ray]\ndirections = 0,0,1; 1,1,2\n[covering]\nsamples = 16\nseed = 4\n";
  testing::write_text(dir / "harmonic.conf", base);
  testing::write_text(dir / "sub.conf", base + "[measure]\npath = empty.csv\n");
  ASSERT_EQ(run({"growth", (dir / "harmonic.conf").string(), "--output", (dir / "a").string()}).code, kExitOk);
  ASSERT_EQ(run({"growth", (dir / "sub.conf").string(), "--output", (dir / "b").string()}).code, kExitOk);
  for (const char* f : {"ray_0.csv", "ray_1.csv"}) {
    EXPECT_EQ(testing::read_file(dir / "a" / f), testing::read_file(dir / "b" / f)) << f;
  }
}

TEST(Cli, OutputDirectoryFromEnvironment) {
  const auto dir = testing::scratch_dir("cli-env");
  testing::write_text(dir / "g.conf",
                      "[params]\nn = 3\np = 1\ngamma = 3\nalpha = 3\n[boundary]\nkind = compact-bump\n"
                      "[ray]\ndirections = 0,0,1\n[covering]\nsamples = 0\n");
  ::setenv(kOutputDirEnv, (dir / "env-out").string().c_str(), 1);
  const auto r = run({"growth", (dir / "g.conf").string()});
  ::unsetenv(kOutputDirEnv);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir / "env-out" / "summary.json"));
}

TEST(Cli, ObstructedRayExitCode) {
  const auto dir = testing::scratch_dir("cli-obstructed");
  testing::write_text(dir / "g.conf",
                      "[params]\nn = 3\np = 1\ngamma = 3\nalpha = 3\n[boundary]\nkind = compact-bump\n"
                      "[ray]\ndirections = 0,0,1\nmin_clear_fraction = 1.1\n[covering]\nsamples = 0\n");
  EXPECT_EQ(run({"growth", (dir / "g.conf").string(), "--output", (dir / "o").string()}).code, kExitObstructed);
}

}  // namespace
}  // namespace halfspace::tools
