#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sweep.hpp"

using namespace snf;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string catalog_text(const std::string& name) { return run({"catalog", name}).out; }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("snf_cli_test_" + name);
}

}  // namespace

TEST(Cli, DecideHexagonFromStdin) {
  const auto r = run({"decide", "-"}, catalog_text("sierpinski-hexagon"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 4), "GLP\n");
}

TEST(Cli, DecideSnowflakeFromFile) {
  const auto path = temp_path("snowflake.snf");
  std::ofstream(path) << catalog_text("lindstrom-snowflake");
  const auto r = run({"decide", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NOGLP\ncycle 1 0 6\n");
  std::filesystem::remove(path);
}

TEST(Cli, Classify) {
  auto r = run({"classify", "--k", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "AlwaysGLP(power_of_two)\n");
  EXPECT_EQ(run({"classify", "--k", "7"}).out, "AlwaysGLP(prime)\n");
  EXPECT_EQ(run({"classify", "--k", "12"}).out, "Conditional\n");
  EXPECT_EQ(run({"classify", "--k", "2"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"decide", "-", "--bogus"}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({"decide", "-", "--method", "psychic"}).code, 3);
  EXPECT_EQ(run({"generate", "--k", "9"}).code, 3);
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("decide"), std::string::npos);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"decide", "/nonexistent/spec.snf"}).code, 2);
  EXPECT_EQ(run({"decide", "-"}, "not a spec\n").code, 2);
  EXPECT_EQ(run({"decide", "-", "--method", "even"}, catalog_text("pentagon-ring")).code, 2);
  EXPECT_EQ(run({"decide", "-", "--method", "odd"}, catalog_text("sierpinski-hexagon")).code, 2);
  EXPECT_EQ(run({"catalog", "no-such-fractal"}).code, 2);
  EXPECT_EQ(run({"generate", "--k", "8", "--kind", "noglp"}).code, 2);
  const auto r = run({"expand", "-", "--level", "9"}, catalog_text("sierpinski-gasket"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("level"), std::string::npos);
}

TEST(Cli, Validate) {
  const auto ok = run({"validate", "-"}, catalog_text("lindstrom-snowflake"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_FALSE(ok.out.empty());
  // A full configuration of two cells cannot be symmetric.
  const auto bad = run({"validate", "-"}, serialize(FractalSpec(6, {CycInt(6), CycInt::root(6, 0, 2)})));
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, MethodsAgree) {
  for (int k : {5, 6, 9, 10, 12}) {
    for (const auto& spec : sweep::symmetric(k, 8)) {
      const auto text = serialize(spec);
      const int general = run({"decide", "-"}, text).code;
      EXPECT_EQ(run({"decide", "-", "--method", k % 2 ? "odd" : "even"}, text).code, general);
      EXPECT_EQ(run({"decide", "-", "--method", "slices"}, text).code, general);
    }
  }
}

TEST(Cli, SlicesMethodReportsSourceIndices) {
  const auto r = run({"decide", "-", "--method", "slices"}, catalog_text("lindstrom-snowflake"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.substr(0, 14), "NOGLP\ncycle 6 ");
}

TEST(Cli, LabelToStdoutAndFile) {
  const auto r = run({"label", "-", "--svg", "-", "--classes"}, catalog_text("sierpinski-hexagon"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("<?xml", 0), 0u);
  EXPECT_NE(r.out.find("<g id=\"classes\""), std::string::npos);

  const auto path = temp_path("gasket.svg");
  const auto f = run({"label", "-", "--svg", path.string(), "--slices"}, catalog_text("sierpinski-gasket"));
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out.substr(0, 4), "GLP\n");
  std::ifstream svg(path);
  const std::string body{std::istreambuf_iterator<char>(svg), std::istreambuf_iterator<char>()};
  EXPECT_NE(body.find("<g id=\"labels\""), std::string::npos);
  EXPECT_NE(body.find("<g id=\"slices\""), std::string::npos);
  std::filesystem::remove(path);

  EXPECT_EQ(run({"label", "-", "--svg", "-"}, catalog_text("lindstrom-snowflake")).code, 1);
}

TEST(Cli, SliceListing) {
  auto r = run({"slices", "-"}, catalog_text("lindstrom-snowflake"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cell 0 6\ncell 1 1\ncell 2 2\ncell 3 3\ncell 4 4\ncell 5 5\ncell 6 central\n");
  r = run({"slices", "-", "--closed"}, catalog_text("sierpinski-hexagon"));
  EXPECT_EQ(r.out.substr(0, 24), "slice 1 0 1\nslice 2 1 2\n");
}

TEST(Cli, SliceExtraction) {
  const auto r = run({"slices", "-", "--closed", "--index", "1"}, catalog_text("sierpinski-hexagon"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# origin 0 1"), std::string::npos);
  const auto sub = parse(r.out);
  EXPECT_TRUE(sub.partial());
  EXPECT_EQ(sub.size(), 2u);
  EXPECT_EQ(run({"slices", "-", "--index", "9"}, catalog_text("sierpinski-hexagon")).code, 2);
}

TEST(Cli, Expand) {
  const auto r = run({"expand", "-", "--level", "2"}, catalog_text("sierpinski-gasket"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# expand level=2"), std::string::npos);
  EXPECT_EQ(parse(r.out).size(), 9u);
  EXPECT_EQ(run({"decide", "-"}, r.out).code, 0);
}

TEST(Cli, Generate) {
  auto r = run({"generate", "--k", "9", "--kind", "noglp"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# generate k=9 kind=noglp n=3 r=3"), std::string::npos);
  EXPECT_EQ(parse(r.out).size(), 3u);
  EXPECT_EQ(run({"decide", "-"}, r.out).code, 1);

  r = run({"generate", "--k", "12", "--kind", "glp"});
  EXPECT_NE(r.out.find("ring_cells=24"), std::string::npos);
  EXPECT_EQ(run({"validate", "-"}, r.out).code, 0);
  EXPECT_EQ(run({"decide", "-"}, r.out).code, 0);

  const auto path = temp_path("gen.snf");
  EXPECT_EQ(run({"generate", "--k", "10", "--kind", "noglp", "--out", path.string()}).code, 0);
  EXPECT_EQ(run({"decide", path.string()}).code, 1);
  std::filesystem::remove(path);
}

TEST(Cli, Catalog) {
  auto r = run({"catalog"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sierpinski-gasket\nvicsek-cross\nsierpinski-hexagon\nlindstrom-snowflake\npentagon-ring\n");
  EXPECT_EQ(run({"catalog", "--name", "vicsek-cross"}).out, catalog_text("vicsek-cross"));
  for (auto name : catalog_names) {
    const auto spec = parse(catalog_text(std::string(name)));
    EXPECT_EQ(serialize(spec), serialize(catalog(name)));
  }
}

TEST(Cli, RandomIsSeeded) {
  const std::vector<std::string> args{"random", "--k", "7", "--cells", "15", "--seed", "99"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse(a.out).size(), 15u);
  const auto sym = run({"random", "--k", "6", "--cells", "12", "--seed", "3", "--symmetrize"});
  EXPECT_EQ(run({"validate", "-"}, sym.out).code, 0);
  EXPECT_FALSE(parse(sym.out).partial());
  EXPECT_EQ(run({"random", "--k", "7", "--cells", "500", "--seed", "1"}).code, 2);
}
