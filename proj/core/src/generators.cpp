#include "orchard/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace orchard {

PointSet gen_parallel_aps(int n, bool double_density) {
  if (n < 1) throw GeometryError("parallel APs need n >= 1");
  std::vector<ProjPoint> pts;
  std::vector<int> labels;
  for (int row = 0; row < 3; ++row) {
    const bool dense = double_density && row == 1;
    const int count = dense ? 2 * n - 1 : n;
    for (int i = 0; i < count; ++i) {
      pts.push_back(mk_point(dense ? Rational(i) / 2 : Rational(i), Rational(row)));
      labels.push_back(row + 1);
    }
  }
  return PointSet(std::move(pts), std::move(labels));
}

std::vector<Rational> ratio_set(int n) {
  if (n < 1) throw GeometryError("ratio set needs n >= 1");
  std::vector<Rational> out;
  for (int sign : {-1, 1}) {
    for (int k = -(n - 1); k <= n - 1; ++k) {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::abs(k)));
      Rational r = k >= 0 ? Rational(p) : Rational(Integer(1), p);
      r.canonicalize();
      out.push_back(sign * r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointSet gen_triangle_ratios(int n, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  if (collinear(p1, p2, p3)) throw GeometryError("triangle vertices are collinear");
  const std::array<const ProjPoint*, 3> v{&p1, &p2, &p3};
  const auto ratios = ratio_set(n);
  std::vector<ProjPoint> pts;
  std::vector<int> labels;
  for (int i = 0; i < 3; ++i) {
    const ProjPoint& prev = *v[(i + 2) % 3];
    const ProjPoint& next = *v[(i + 1) % 3];
    for (const auto& r : ratios) {
      pts.push_back(point_with_ratio(prev, next, r));
      labels.push_back(i + 1);
    }
  }
  return PointSet(std::move(pts), std::move(labels));
}

PointSet gen_triangle_ratios(int n) {
  return gen_triangle_ratios(n, mk_point(0, 0), mk_point(1, 0), mk_point(0, 1));
}

std::size_t NgonConfig::count_direction_classes() const {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::size_t distinct = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      char& s = seen[static_cast<std::size_t>(direction_class(i, j))];
      if (!s) {
        s = 1;
        ++distinct;
      }
    }
  }
  return distinct;
}

std::size_t NgonConfig::two_vertex_direction_lines() const {
  // D is the set of directions realized by chords. No three vertices of a
  // convex polygon are collinear, so each chord line carries exactly two
  // vertices, and it is a CCD line iff its direction lies in D.
  std::vector<char> in_d(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) in_d[static_cast<std::size_t>(direction_class(i, j))] = 1;
  }
  std::size_t lines = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (in_d[static_cast<std::size_t>(direction_class(i, j))]) ++lines;
    }
  }
  return lines;
}

NgonConfig gen_ngon_directions(int n) {
  if (n < 3) throw GeometryError("n-gon needs n >= 3");
  NgonConfig cfg;
  cfg.n = n;
  cfg.float_vertices.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    cfg.float_vertices.push_back({std::cos(t), std::sin(t)});
  }
  return cfg;
}

PointSet gen_cubic_power(int n) {
  if (n < 1) throw GeometryError("cubic power set needs n >= 1");
  std::vector<ProjPoint> pts;
  for (int i = -n; i <= n; ++i) {
    const Integer x = i;
    pts.push_back(mk_point(Rational(x), Rational(x * x * x)));
  }
  return PointSet(std::move(pts));
}

PointSet gen_parabola_ap(int n) {
  if (n < 2) throw GeometryError("parabola AP needs n >= 2");
  std::vector<ProjPoint> pts;
  for (int i = 1; i <= n; ++i) {
    const Integer x = i;
    pts.push_back(mk_point(Rational(x), Rational(x * x)));
  }
  return PointSet(std::move(pts));
}

PointSet gen_grid(int k) {
  if (k < 2) throw GeometryError("grid needs k >= 2");
  std::vector<ProjPoint> pts;
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) pts.push_back(mk_point(x, y));
  }
  return PointSet(std::move(pts));
}

}  // namespace orchard
