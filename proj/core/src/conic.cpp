#include "orchard/conic.hpp"
#include "orchard/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace orchard {

ExternalPoint::ExternalPoint(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_ == a_ * a_) throw GeometryError("external point lies on the parabola y = x^2");
}

Rep4 representative(const ExternalPoint& e) { return {e.a(), -e.b(), Rational(1), -e.a()}; }

bool parabola_collinear(const Rational& x, const Rational& y, const ExternalPoint& e) {
  if (x == y) throw GeometryError("parabola chord needs distinct x and y");
  return sgn(x * y - e.a() * x - e.a() * y + e.b()) == 0;
}

Rational involution_value(const ExternalPoint& e, const Rational& x) {
  if (x == e.a()) throw GeometryError("involution pole at x = a");
  return (e.a() * x - e.b()) / (x - e.a());
}

std::size_t image_count(const ExternalPoint& e, std::span<const Rational> xs) {
  std::size_t count = 0;
  for (const auto& x : xs) {
    if (x == e.a()) continue;
    const Rational y = involution_value(e, x);
    if (std::binary_search(xs.begin(), xs.end(), y)) ++count;
  }
  return count;
}

std::vector<ExternalPoint> filter_by_image_count(std::span<const ExternalPoint> h1,
                                                 std::span<const Rational> xs,
                                                 std::size_t threshold) {
  std::vector<ExternalPoint> kept;
  for (const auto& e : h1) {
    if (image_count(e, xs) >= threshold) kept.push_back(e);
  }
  return kept;
}

bool reps_collinear(const ExternalPoint& e1, const ExternalPoint& e2, const ExternalPoint& e3) {
  if (e1 == e2 || e2 == e3 || e1 == e3) throw GeometryError("representatives need distinct points");
  const Rep4 r1 = representative(e1), r2 = representative(e2), r3 = representative(e3);
  Rep4 u, v;
  for (std::size_t i = 0; i < 4; ++i) {
    u[i] = r2[i] - r1[i];
    v[i] = r3[i] - r1[i];
  }
  // rank [u; v] <= 1 iff every 2x2 minor vanishes
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (sgn(u[i] * v[j] - u[j] * v[i]) != 0) return false;
    }
  }
  return true;
}

std::optional<Rational> affine_coefficient(const ExternalPoint& e1, const ExternalPoint& e2,
                                           const ExternalPoint& e3) {
  if (!reps_collinear(e1, e2, e3)) return std::nullopt;
  const Rep4 r1 = representative(e1), r2 = representative(e2), r3 = representative(e3);
  // r3 - r2 = lambda (r1 - r2)
  for (std::size_t i = 0; i < 4; ++i) {
    if (r1[i] != r2[i]) return (r3[i] - r2[i]) / (r1[i] - r2[i]);
  }
  return std::nullopt;
}

InfinityExperiment send_line_to_infinity_experiment(const PointSet& labelled, const ProjLine& l1) {
  const auto& labels = labelled.labels();
  for (std::size_t i = 0; i < labelled.size(); ++i) {
    const bool on = incident(labelled[i], l1);
    if ((labels[i] == 1) != on) {
      throw GeometryError("group 1 must be exactly the points on l1");
    }
  }
  InfinityExperiment out;
  out.tripartite_before = tripartite_count(labelled, {1, 2, 3});

  const Matrix3 m = transform_sending_to_infinity(l1);
  std::vector<ProjPoint> image;
  image.reserve(labelled.size());
  for (const auto& p : labelled.points()) image.push_back(apply_transform(m, p));
  const PointSet moved(image, labels);
  out.tripartite_after = tripartite_count(moved, {1, 2, 3});

  std::unordered_set<ProjPoint, HomogeneousHash> h1;
  for (const auto& p : moved.group(1)) h1.insert(p);
  std::unordered_set<ProjPoint, HomogeneousHash> used;
  const auto h2 = moved.group(2);
  const auto h3 = moved.group(3);
  for (const auto& p : h2) {
    for (const auto& q : h3) {
      const ProjPoint d = direction_of(join(p, q));
      if (h1.count(d) != 0) {
        ++out.good_pairs;
        used.insert(d);
      }
    }
  }
  out.directions_used = used.size();
  return out;
}

}  // namespace orchard
