#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "orchard/points_file.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = orchard::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("orchard-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("bound") {
  const auto r = run({"bound", "--n", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == "19\n");
}

TEST_CASE("generate then count") {
  TempDir dir;
  const auto g = run({"generate", "--example", "cubic-power", "--n", "2", "--out", dir / "c.json"});
  REQUIRE(g.code == 0);
  CHECK(run({"count", "--in", dir / "c.json", "--k", "3"}).out == "2\n");
  CHECK(run({"count", "--in", dir / "c.json", "--k", "3", "--workers", "1"}).out == "2\n");

  REQUIRE(run({"generate", "--example", "parallel-aps", "--n", "3", "--out", dir / "p.json"}).code == 0);
  CHECK(run({"count", "--in", dir / "p.json", "--tripartite", "123"}).out == "5\n");
  CHECK(run({"count", "--in", dir / "p.json", "--k", "2", "--exactly"}).code == 0);
}

TEST_CASE("generate is deterministic and round trips") {
  TempDir dir;
  const auto a = run({"generate", "--example", "triangle-ratios", "--n", "3"});
  const auto b = run({"generate", "--example", "triangle-ratios", "--n", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  const auto set = orchard::read_points(in);
  std::ostringstream again;
  orchard::write_points(again, set);
  CHECK(again.str() == a.out);
  REQUIRE(run({"generate", "--example", "triangle-ratios", "--n", "3", "--out", dir / "t.json"}).code == 0);
  CHECK(slurp(dir / "t.json") == a.out);
}

TEST_CASE("plot is deterministic") {
  TempDir dir;
  REQUIRE(run({"generate", "--example", "grid", "--n", "3", "--out", dir / "g.json"}).code == 0);
  REQUIRE(run({"plot", "--in", dir / "g.json", "--out", dir / "a.svg", "--mark-triple-lines"}).code == 0);
  REQUIRE(run({"plot", "--in", dir / "g.json", "--out", dir / "b.svg", "--mark-triple-lines"}).code == 0);
  CHECK(slurp(dir / "a.svg") == slurp(dir / "b.svg"));
  CHECK(slurp(dir / "a.svg").find("triple-line") != std::string::npos);
}

TEST_CASE("group-check and tenpoint") {
  for (const char* c : {"example1", "example4", "triangle", "parabola-inf", "hyperbola-inf"}) {
    const auto r = run({"group-check", "--config", c, "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",0,true\n") != std::string::npos);
  }
  const auto t = run({"tenpoint", "--curve", "cuspidal", "--base=-1,0,1", "--delta", "1/10", "--extend", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("lattice_failures,0") != std::string::npos);
  CHECK(t.out.find("nine_point,true") != std::string::npos);
  const auto w = run({"cantilever", "--curve", "weierstrass:0,17", "--base=-2,-1,4", "--delta", "8", "--extend", "1"});
  CHECK(w.code == 0);
  CHECK(w.out.find("B5,") != std::string::npos);
}

TEST_CASE("conic and experiment") {
  CHECK(run({"conic", "--mode", "collinear", "--a", "0", "--b", "-1", "--x", "2", "--y", "1/2"}).out == "true\n");
  CHECK(run({"conic", "--mode", "involution", "--a", "0", "--b", "-1", "--x", "2"}).out == "1/2\n");
  CHECK(run({"conic", "--mode", "image-count", "--a", "0", "--b", "-1", "--xs", "1,2,1/2,3"}).out == "3\n");
  const auto e = run({"experiment", "--kind", "dichotomy", "--degree", "3", "--n", "5"});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("status,", 0) == 0);
  CHECK(e.out.find("evidence,3,5,") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == orchard::cli::usage_error);
  CHECK(run({"frobnicate"}).code == orchard::cli::usage_error);
  CHECK(run({"bound"}).code == orchard::cli::usage_error);
  CHECK(run({"generate", "--example", "nope", "--n", "3"}).code == orchard::cli::usage_error);
  CHECK(run({"count", "--in", "/nonexistent.json"}).code == orchard::cli::usage_error);
  CHECK(run({"conic", "--mode", "involution", "--a", "0", "--b", "-1", "--x", "0"}).code == orchard::cli::usage_error);
  CHECK(run({"tenpoint", "--curve", "cuspidal", "--base=-1,0,1", "--delta", "1"}).code == orchard::cli::usage_error);
  CHECK(run({"--help"}).code == orchard::cli::ok);
}
