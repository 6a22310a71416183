#include <doctest.h>

#include "orchard/generators.hpp"
#include "support/oracle.hpp"

using namespace orchard;

namespace {

std::size_t cubic_zero_sum_triples(int n) {
  std::size_t c = 0;
  for (int a = -n; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const int d = -a - b;
      if (d > b && d <= n) ++c;
    }
  return c;
}

}  // namespace

TEST_CASE("parallel APs") {
  const auto h = gen_parallel_aps(3);
  CHECK(h.size() == 9);
  CHECK(tripartite_count(h, {1, 2, 3}) == 5);
  CHECK(tripartite_count(gen_parallel_aps(1), {1, 2, 3}) == 1);
  for (int n = 1; n <= 12; ++n) {
    const auto p = gen_parallel_aps(n);
    const std::size_t expect = n % 2 == 0 ? static_cast<std::size_t>(n * n / 2)
                                          : static_cast<std::size_t>((n * n + 1) / 2);
    CHECK(tripartite_count(p, {1, 2, 3}) == expect);
    CHECK(tripartite_count(p, {1, 2, 3}) == oracle::tripartite(oracle::raw_all(p), p.labels(), {1, 2, 3}));
  }
  CHECK(tripartite_count(gen_parallel_aps(200), {1, 2, 3}) == 20000);

  const auto dense = gen_parallel_aps(4, true);
  CHECK(dense.group(2).size() == 7);
  CHECK(dense.group(1).size() == 4);
}

TEST_CASE("ratio set") {
  const auto r = ratio_set(3);
  REQUIRE(r.size() == 10);
  CHECK(r.front() == -4);
  CHECK(r.back() == 4);
  CHECK(std::count(r.begin(), r.end(), Rational(1, 4)) == 1);
  CHECK(ratio_set(1) == std::vector<Rational>{Rational(-1), Rational(1)});
}

TEST_CASE("triangle ratios") {
  const auto h = gen_triangle_ratios(1);
  CHECK(h.size() == 6);
  for (int g = 1; g <= 3; ++g) CHECK(h.group(g).size() == 2);
  const auto side3 = h.group(3);  // side P1P2 = (0,0)-(1,0)
  CHECK(std::count(side3.begin(), side3.end(), mk_point(Rational(1, 2), Rational(0))) == 1);
  CHECK(std::count(side3.begin(), side3.end(), ProjPoint(Integer(1), Integer(0), Integer(0))) == 1);

  for (int n = 1; n <= 5; ++n) {
    const auto t = gen_triangle_ratios(n);
    CHECK(t.size() == static_cast<std::size_t>(3 * (4 * n - 2)));
    CHECK(tripartite_count(t, {1, 2, 3}) == oracle::tripartite(oracle::raw_all(t), t.labels(), {1, 2, 3}));
  }

  const auto skew = gen_triangle_ratios(3, mk_point(Rational(1), Rational(2)), mk_point(Rational(-3), Rational(5)),
                                        mk_point(Rational(7, 2), Rational(-1)));
  CHECK(tripartite_count(skew, {1, 2, 3}) == tripartite_count(gen_triangle_ratios(3), {1, 2, 3}));
  CHECK_THROWS_AS(gen_triangle_ratios(2, mk_point(0, 0), mk_point(1, 1), mk_point(2, 2)), GeometryError);
}

TEST_CASE("regular polygon directions") {
  const auto four = gen_ngon_directions(4);
  CHECK(four.count_direction_classes() == 4);
  CHECK(four.direction_class(0, 1) != four.direction_class(1, 2));
  CHECK(four.direction_class(0, 1) == four.direction_class(2, 3));
  const auto three = gen_ngon_directions(3);
  CHECK(three.count_direction_classes() == 3);
  CHECK(three.chord_count() == 3);
  const auto big = gen_ngon_directions(1000);
  CHECK(big.count_direction_classes() == 1000);
  CHECK(big.chord_count() == 499500);
  CHECK(big.two_vertex_direction_lines() == 499500);
  CHECK(big.float_vertices.size() == 1000);
  CHECK_THROWS_AS(gen_ngon_directions(2), GeometryError);
}

TEST_CASE("cubic power") {
  CHECK(gen_cubic_power(2).size() == 5);
  CHECK(triple_line_count(spanned_lines(gen_cubic_power(2))) == 2);
  CHECK(triple_line_count(spanned_lines(gen_cubic_power(1))) == 1);
  for (int n = 1; n <= 8; ++n) {
    const auto h = gen_cubic_power(n);
    const auto raw = oracle::raw_all(h);
    CHECK(triple_line_count(spanned_lines(h)) == cubic_zero_sum_triples(n));
    CHECK(oracle::collinear_triples(raw) == cubic_zero_sum_triples(n));
  }
}

TEST_CASE("parabola AP and grid") {
  CHECK(gen_parabola_ap(2).size() == 2);
  CHECK(direction_count(gen_parabola_ap(5)) == 7);
  CHECK(triple_line_count(spanned_lines(gen_parabola_ap(3))) == 0);

  CHECK(triple_line_count(spanned_lines(gen_grid(3))) == 8);
  CHECK(triple_line_count(spanned_lines(gen_grid(2))) == 0);
  // 4 rows, 4 columns, 3 + 3 diagonals of length >= 3
  const auto g4 = gen_grid(4);
  CHECK(triple_line_count(spanned_lines(g4)) == 14);
  CHECK(oracle::rich_count(oracle::raw_all(g4), 3) == 14);
}

TEST_CASE("generated sets respect the universal bound") {
  std::vector<PointSet> sets{gen_parallel_aps(7), gen_triangle_ratios(3), gen_cubic_power(9),
                             gen_parabola_ap(12), gen_grid(6)};
  for (const auto& h : sets) {
    const auto n = static_cast<std::uint64_t>(h.size());
    CHECK(3 * triple_line_count(spanned_lines(h)) <= n * (n - 1) / 2);
  }
}
