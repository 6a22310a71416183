#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orchard/projective.hpp"
#include "orchard/rich_lines.hpp"

namespace orchard {

/// A point (a, b) off the parabola y = x^2.
class ExternalPoint {
 public:
  ExternalPoint(Rational a, Rational b);
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  ProjPoint point() const { return mk_point(a_, b_); }
  friend bool operator==(const ExternalPoint& p, const ExternalPoint& q) {
    return p.a_ == q.a_ && p.b_ == q.b_;
  }

 private:
  Rational a_, b_;
};

/// (a, -b, 1, -a).
using Rep4 = std::array<Rational, 4>;
Rep4 representative(const ExternalPoint& e);

/// (x, x^2), (y, y^2), (a, b) are collinear iff xy - a x - a y + b = 0.
/// Requires x != y.
bool parabola_collinear(const Rational& x, const Rational& y, const ExternalPoint& e);

/// The partner (a x - b) / (x - a) of x under the involution centred at e.
/// Throws GeometryError at the pole x = a.
Rational involution_value(const ExternalPoint& e, const Rational& x);

/// #{x in xs : x != a and involution_value(e, x) in xs}. `xs` must be sorted
/// and duplicate-free (std::set order).
std::size_t image_count(const ExternalPoint& e, std::span<const Rational> xs);

/// Points of `h1` whose involution maps at least `threshold` elements of xs
/// into xs (the pruning step before the image-set argument).
std::vector<ExternalPoint> filter_by_image_count(std::span<const ExternalPoint> h1,
                                                 std::span<const Rational> xs,
                                                 std::size_t threshold);

/// The three representatives are affinely dependent (rank of differences
/// <= 1). Requires pairwise distinct points.
bool reps_collinear(const ExternalPoint& e1, const ExternalPoint& e2, const ExternalPoint& e3);

/// lambda with rep(e3) = lambda rep(e1) + (1 - lambda) rep(e2), if it exists.
std::optional<Rational> affine_coefficient(const ExternalPoint& e1, const ExternalPoint& e2,
                                           const ExternalPoint& e3);

/// Projective reduction for two collinear groups: H1 (label 1) lies on l1,
/// which is sent to the line at infinity. Each 123-line then becomes an
/// H2' x H3' pair whose direction is a point of H1'.
struct InfinityExperiment {
  std::size_t tripartite_before = 0;
  std::size_t tripartite_after = 0;
  std::size_t good_pairs = 0;        // pairs of H2' x H3' with direction in H1'
  std::size_t directions_used = 0;   // distinct such directions, at most |H1|
};

InfinityExperiment send_line_to_infinity_experiment(const PointSet& labelled, const ProjLine& l1);

}  // namespace orchard
