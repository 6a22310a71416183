#include <algorithm>
#include <cmath>
#include <string>

#include "orchard/tenpoint.hpp"

namespace orchard {

namespace {

constexpr int kRootSamples = 256;
constexpr int kRootIterations = 200;

// Signed position of q relative to the line through p1 and p2.
double side(Point2 p1, Point2 p2, Point2 q) {
  return (p2.y - p1.y) * (q.x - p1.x) - (p2.x - p1.x) * (q.y - p1.y);
}

// The crossing of the line p1p2 with the arc, located by sampling for a sign
// change and refining by bisection.
Point2 cut(const SampledArc& arc, Point2 p1, Point2 p2, const char* what) {
  auto g = [&](double t) { return side(p1, p2, arc.at(t)); };
  double prev_t = arc.lo;
  double prev_g = g(prev_t);
  if (prev_g == 0.0) return arc.at(prev_t);
  for (int s = 1; s <= kRootSamples; ++s) {
    const double t = arc.lo + (arc.hi - arc.lo) * s / kRootSamples;
    const double gt = g(t);
    if (gt == 0.0) return arc.at(t);
    if ((gt < 0) != (prev_g < 0)) {
      double lo = prev_t, hi = t, glo = prev_g;
      for (int it = 0; it < kRootIterations && hi - lo > 0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double gm = g(mid);
        if (gm == 0.0) return arc.at(mid);
        if ((gm < 0) == (glo < 0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      return arc.at(0.5 * (lo + hi));
    }
    prev_t = t;
    prev_g = gt;
  }
  throw GeometryError(std::string("construction leaves the arc (") + what + ")");
}

}  // namespace

void check_standard_system(const StandardSystem& s, int samples) {
  const double lo = std::max({s.alpha.lo, s.beta.lo, s.gamma.lo});
  const double hi = std::min({s.alpha.hi, s.beta.hi, s.gamma.hi});
  if (!(lo < 0.0 && 0.0 < hi)) throw GeometryError("arcs must share a neighbourhood of 0");
  auto grid = [&](const SampledArc& a, int k) { return a.lo + (a.hi - a.lo) * k / (samples - 1); };

  for (int k = 0; k < samples; ++k) {
    const double x = lo + (hi - lo) * k / (samples - 1);
    if (!(s.alpha.f(x) < s.beta.f(x) && s.beta.f(x) < s.gamma.f(x))) {
      throw GeometryError("arcs are not ordered alpha < beta < gamma at x = " + std::to_string(x));
    }
  }
  // A line through a sampled point of one arc and a sampled point of another
  // may cross that other arc at most once.
  const std::array<const SampledArc*, 3> arcs{&s.alpha, &s.beta, &s.gamma};
  const int coarse = std::max(3, samples / 4);
  for (std::size_t from = 0; from < 3; ++from) {
    for (std::size_t to = 0; to < 3; ++to) {
      if (from == to) continue;
      for (int u = 0; u < coarse; ++u) {
        const Point2 p = arcs[from]->at(grid(*arcs[from], u * (samples - 1) / (coarse - 1)));
        for (int v = 0; v < samples; v += 2) {
          const Point2 q = arcs[to]->at(grid(*arcs[to], v));
          int changes = 0;
          double last = 0.0;
          for (int w = 0; w < samples; ++w) {
            const double g = side(p, q, arcs[to]->at(grid(*arcs[to], w)));
            if (std::abs(g) < 1e-12) continue;
            if (last != 0.0 && (g < 0) != (last < 0)) ++changes;
            last = g;
          }
          if (changes > 1) throw GeometryError("a line meets an arc more than once");
        }
      }
    }
  }
}

Point2 construct_b(const StandardSystem& s, double x) {
  const Point2 a0 = s.alpha.at(0.0);
  const Point2 c0 = s.gamma.at(0.0);
  const Point2 p = s.beta.at(x);
  if (x == 0.0) return p;
  const Point2 a = cut(s.alpha, p, c0, "A(P)");
  const Point2 c = cut(s.gamma, p, a0, "C(P)");
  return cut(s.beta, a, c, "B(P)");
}

HalvingResult halve_parameter(const StandardSystem& s, Point2 target, double tolerance,
                              int max_iterations) {
  auto h = [&](double x) { return construct_b(s, x).x - target.x; };
  if (target.x == 0.0) return {s.beta.at(0.0), s.beta.at(0.0), 0};

  // P lies between B0 and the target; fall back to the whole middle arc.
  double lo = std::min(0.0, target.x), hi = std::max(0.0, target.x);
  double hlo = h(lo), hhi = h(hi);
  if ((hlo < 0) == (hhi < 0) && hlo != 0.0 && hhi != 0.0) {
    lo = s.beta.lo;
    hi = s.beta.hi;
    hlo = h(lo);
    hhi = h(hi);
    if ((hlo < 0) == (hhi < 0)) throw GeometryError("halving: target is not bracketed on the arc");
  }
  int it = 0;
  double x = hlo == 0.0 ? lo : hi;
  if (hlo != 0.0 && hhi != 0.0) {
    while (it < max_iterations) {
      ++it;
      const double mid = 0.5 * (lo + hi);
      const double hm = h(mid);
      x = mid;
      if (hm == 0.0 || mid <= lo || mid >= hi) break;
      if ((hm < 0) == (hlo < 0)) {
        lo = mid;
        hlo = hm;
      } else {
        hi = mid;
      }
    }
  }
  const Point2 b = construct_b(s, x);
  if (std::hypot(b.x - target.x, b.y - target.y) > tolerance) {
    throw GeometryError("halving did not converge within " + std::to_string(max_iterations) + " steps");
  }
  return {s.beta.at(x), b, it};
}

}  // namespace orchard
