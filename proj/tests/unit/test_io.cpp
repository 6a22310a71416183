#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "orchard/generators.hpp"
#include "orchard/points_file.hpp"
#include "orchard/svg.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace orchard;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

PointSet round_trip(const PointSet& s) {
  std::stringstream buf;
  write_points(buf, s);
  return read_points(buf);
}

}  // namespace

TEST_CASE("rational text") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+4/2") == Rational(2));
  CHECK(format_rational(Rational(-6) / 4) == "-3/2");
  CHECK(format_rational(Rational(5)) == "5/1");
  CHECK(parse_rational("1/-2") == Rational(-1, 2));
  for (const char* bad : {"", "1/0", "1/", "/2", "x", "1.5", "1 / 2", "2/3/4"}) {
    CHECK_THROWS_AS(parse_rational(bad), FormatError);
  }
}

TEST_CASE("points file round trip") {
  testgen::Source src(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ProjPoint> pts;
    std::vector<int> labels;
    const int n = 1 + static_cast<int>(src.integer(0, 12));
    for (int i = 0; i < n; ++i) {
      if (src.coin()) {
        pts.push_back(mk_point(src.rational(50, 9), src.rational(50, 9)));
      } else {
        pts.emplace_back(src.integer(-9, 9), Integer(1), Integer(0));
      }
      if (std::find(pts.begin(), pts.end() - 1, pts.back()) != pts.end() - 1) {
        pts.pop_back();
        continue;
      }
      labels.push_back(1 + static_cast<int>(src.integer(0, 2)));
    }
    const PointSet plain(pts);
    const PointSet labelled(pts, labels);
    const auto back = round_trip(plain);
    CHECK(back.points() == plain.points());
    CHECK_FALSE(back.has_labels());
    const auto back2 = round_trip(labelled);
    CHECK(back2.points() == labelled.points());
    REQUIRE(back2.has_labels());
    CHECK(back2.labels() == labels);
  }
}

TEST_CASE("malformed documents") {
  const char* docs[] = {
      "",
      "[]",
      R"({"points": 3})",
      R"({"points": [{"x": "1"}]})",
      R"({"points": [{"x": "1", "y": "1/0"}]})",
      R"({"points": [{"h": ["0", "0", "0"]}]})",
      R"({"points": [{"h": ["1", "2"]}]})",
      R"({"points": [{"x": "1", "y": "2"}], "labels": [4]})",
      R"({"points": [{"x": "1", "y": "2"}], "labels": [1, 2]})",
  };
  for (const char* d : docs) {
    std::istringstream in(d);
    CHECK_THROWS_AS(read_points(in), FormatError);
  }
  CHECK_THROWS_AS(read_points_file("/nonexistent/points.json"), FormatError);
}

TEST_CASE("svg is deterministic with one path per triple line") {
  const PointSet grid = gen_grid(4);
  const std::string a = render_svg(grid, {true, 640});
  CHECK(a == render_svg(grid, {true, 640}));
  CHECK(occurrences(a, "class=\"triple-line\"") == oracle::rich_count(oracle::raw_all(grid), 3, false));
  CHECK(occurrences(render_svg(grid), "class=\"triple-line\"") == 0);
  CHECK(occurrences(a, "<circle") == 16);

  const PointSet aps = gen_parallel_aps(5);
  const std::string b = render_svg(aps, {true, 300});
  CHECK(occurrences(b, "class=\"triple-line\"") == oracle::rich_count(oracle::raw_all(aps), 3, false));
  CHECK(b.find("<svg") != std::string::npos);
  CHECK(b.find("</svg>") != std::string::npos);
}

TEST_CASE("svg draws points at infinity") {
  const PointSet s({mk_point(0, 0), mk_point(1, 1), ProjPoint(Integer(1), Integer(1), Integer(0))});
  const std::string svg = render_svg(s, {true, 200});
  CHECK(occurrences(svg, "class=\"infinite-point\"") == 1);
  CHECK(occurrences(svg, "class=\"triple-line\"") == 1);
}
