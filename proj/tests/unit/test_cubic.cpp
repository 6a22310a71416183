#include <doctest.h>

#include "orchard/cubic.hpp"
#include "orchard/generators.hpp"
#include "support/random.hpp"

using namespace orchard;

namespace {

ProjPoint A(const Rational& x, const Rational& y) { return mk_point(x, y); }
ProjLine L(long a, long b, long c) { return ProjLine(Integer(a), Integer(b), Integer(c)); }

CubicForm product(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3) {
  return CubicForm(TernaryForm::linear(l1) * TernaryForm::linear(l2) * TernaryForm::linear(l3));
}

// X^3 - Y Z^2
CubicForm cuspidal() {
  std::array<Integer, 10> c{};
  c[0] = 1;
  c[8] = -1;
  return CubicForm(c);
}

// Z (X^2 + Y^2 - Z^2)
CubicForm circle_and_infinity() {
  TernaryForm q(2);
  q.add({2, 0, 0}, 1);
  q.add({0, 2, 0}, 1);
  q.add({0, 0, 2}, -1);
  return CubicForm(TernaryForm::linear(L(0, 0, 1)) * q);
}

const ProjLine row0 = L(0, 1, 0), row1 = L(0, 1, -1), row2 = L(0, 1, -2);

}  // namespace

TEST_CASE("cubic form canonical representation") {
  CHECK(cuspidal().to_string() == "X^3 - Y*Z^2");
  std::array<Integer, 10> scaled{};
  scaled[0] = -6;
  scaled[8] = 6;
  CHECK(CubicForm(scaled) == cuspidal());
  CHECK_THROWS_AS(CubicForm(std::array<Integer, 10>{}), GeometryError);
}

TEST_CASE("contains") {
  CHECK(contains(cuspidal(), A(2, 8)));
  CHECK_FALSE(contains(cuspidal(), A(1, 2)));
  const auto rows = product(row0, row1, row2);
  const auto aps = gen_parallel_aps(5);
  for (const auto& p : aps.points()) CHECK(contains(rows, p));
}

TEST_CASE("homogeneity") {
  testgen::Source src(4);
  for (int t = 0; t < 100; ++t) {
    std::array<Integer, 10> c;
    for (auto& v : c) v = src.integer(-5, 5);
    c[0] = 1;
    const CubicForm f(c);
    const auto p = src.point();
    const long k = src.integer(2, 7);
    const TernaryForm g = f.as_form();
    const Rational scaled = g.evaluate(p);
    Rational manual = 0;
    for (const auto& [e, coef] : g.terms()) {
      Rational term = coef;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < e[i]; ++j) term *= Rational(p[i] * k);
      manual += term;
    }
    CHECK(manual == scaled * k * k * k);
  }
}

TEST_CASE("fit_cubics") {
  const auto cfg = gen_cubic_power(5);
  std::vector<ProjPoint> nine(cfg.points().begin(), cfg.points().begin() + 9);
  auto basis = fit_cubics(nine);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == cuspidal());

  testgen::Source src(31);
  std::vector<ProjPoint> eight;
  for (int i = 0; i < 8; ++i) eight.push_back(src.point());
  CHECK(fit_cubics(eight).size() == 2);
  for (const auto& f : fit_cubics(eight))
    for (const auto& p : eight) CHECK(contains(f, p));

  std::vector<ProjPoint> ten;
  for (int i = 0; i < 10; ++i) ten.push_back(src.point());
  CHECK(fit_cubics(ten).empty());
  CHECK_FALSE(on_common_cubic(ten).has_value());

  for (int t = 0; t < 20; ++t) {
    std::vector<ProjPoint> any9;
    for (int i = 0; i < 9; ++i) any9.push_back(src.point(4, 3));
    CHECK_FALSE(fit_cubics(any9).empty());
  }
}

TEST_CASE("on_common_cubic") {
  const auto cfg = gen_cubic_power(6);
  std::vector<ProjPoint> ten(cfg.points().begin(), cfg.points().begin() + 10);
  auto f = on_common_cubic(ten);
  REQUIRE(f.has_value());
  CHECK(*f == cuspidal());

  auto grid = gen_grid(3).points();
  grid.push_back(A(3, 0));
  f = on_common_cubic(grid);
  REQUIRE(f.has_value());
  for (const auto& p : grid) CHECK(contains(*f, p));
  CHECK(*f == product(row0, row1, row2));
}

TEST_CASE("line_divides") {
  const auto rows = product(row0, row1, row2);
  CHECK(line_divides(rows, row1));
  CHECK_FALSE(line_divides(rows, L(1, 0, 0)));
  CHECK(line_divides(circle_and_infinity(), line_at_infinity()));
  const auto pts = gen_cubic_power(3).points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK_FALSE(line_divides(cuspidal(), join(pts[i], pts[j])));

  testgen::Source src(17);
  for (int t = 0; t < 30; ++t) {
    const ProjPoint p = src.point(), q = src.point();
    if (p == q) continue;
    const ProjLine l = join(p, q);
    const CubicForm f = product(l, join(src.point(), A(0, 0)), L(1, 2, 3));
    REQUIRE(line_divides(f, l));
    for (int s = 0; s < 5; ++s) CHECK(contains(f, point_with_ratio(p, q, src.rational())));
  }
}

TEST_CASE("classify_with_candidates") {
  const auto rows = product(row0, row1, row2);
  const std::vector<ProjLine> row_lines{row0, row1, row2};
  auto c = classify_with_candidates(rows, row_lines);
  CHECK(c.kind == CubicClass::three_lines);
  CHECK(c.line_factors.size() == 3);

  const std::vector<ProjLine> infinity{line_at_infinity()};
  c = classify_with_candidates(circle_and_infinity(), infinity);
  CHECK(c.kind == CubicClass::line_plus_conic);

  std::vector<ProjLine> grid_lines;
  for (const auto& e : spanned_lines(gen_grid(3)).entries) grid_lines.push_back(e.line);
  CHECK(classify_with_candidates(cuspidal(), grid_lines).kind == CubicClass::no_candidate_factor);

  // two candidate lines leave a linear cofactor, which is itself a line
  const std::vector<ProjLine> two{row0, row2};
  c = classify_with_candidates(rows, two);
  CHECK(c.kind == CubicClass::three_lines);
  CHECK(std::count(c.line_factors.begin(), c.line_factors.end(), row1) == 1);
}
