#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "orchard/projective.hpp"
#include "orchard/rich_lines.hpp"

namespace orchard {

/// Three copies of {0..n-1} on the rows y = 0, 1, 2, labelled by row. With
/// `double_density` the middle row holds {0, 1/2, ..., n-1}.
PointSet gen_parallel_aps(int n, bool double_density = false);

/// The ratio set {+-2^k : |k| <= n-1} (4n - 2 values, sorted).
std::vector<Rational> ratio_set(int n);

/// On each side line P_{i-1}P_{i+1} (indices mod 3) the points X with
/// P_{i-1}X / XP_{i+1} in ratio_set(n); X is labelled i. Ratio -1 yields the
/// side's point at infinity.
PointSet gen_triangle_ratios(int n, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);
PointSet gen_triangle_ratios(int n);  // triangle (0,0), (1,0), (0,1)

/// Regular n-gon handled combinatorially: chord {i, j} has direction class
/// (i + j) mod n, and two chords are parallel iff their classes agree.
struct NgonConfig {
  int n = 0;
  std::vector<std::array<double, 2>> float_vertices;  // display only

  int direction_class(int i, int j) const { return (i + j) % n; }
  std::size_t chord_count() const { return static_cast<std::size_t>(n) * (n - 1) / 2; }
  /// Distinct classes over all chords, by enumeration.
  std::size_t count_direction_classes() const;
  /// |T(C^2 D)|: lines through two vertices and one of the n directions.
  std::size_t two_vertex_direction_lines() const;
};

NgonConfig gen_ngon_directions(int n);

/// {(i, i^3) : i = -n..n}.
PointSet gen_cubic_power(int n);
/// {(i, i^2) : i = 1..n}.
PointSet gen_parabola_ap(int n);
/// Integer grid [0, k)^2.
PointSet gen_grid(int k);

}  // namespace orchard
