#include "orchard/incidence.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "orchard/errors.hpp"
#include "orchard/group_law.hpp"

namespace orchard {

namespace {

Rational power(const Rational& x, int d) {
  Rational r = 1;
  for (int i = 0; i < d; ++i) r *= x;
  return r;
}

TernaryForm graph_form(int d) {
  TernaryForm f(d);
  f.add({0, 1, d - 1}, Rational(1));
  f.add({d, 0, 0}, Rational(-1));
  return f;
}

void require_non_vertical(const ProjLine& l) {
  if (sgn(l[1]) == 0) throw GeometryError("curve line must not be vertical or at infinity");
}

ProjPoint point_on_line(const ProjLine& l, const Rational& x) {
  Rational y = -(Rational(l[0]) * x + Rational(l[2])) / Rational(l[1]);
  return mk_point(x, y);
}

}  // namespace

CurveSpec::CurveSpec(CurveKind kind, std::string name, TernaryForm form, bool irreducible,
                     Lifter lift)
    : kind_(kind),
      name_(std::move(name)),
      form_(std::move(form)),
      irreducible_(irreducible),
      lift_(std::move(lift)) {}

CurveSpec CurveSpec::graph_power(int d) {
  if (d < 1) throw GeometryError("graph power needs d >= 1");
  return CurveSpec(CurveKind::graph_power, "y=x^" + std::to_string(d), graph_form(d), true,
                   [d](const Rational& x) {
                     return std::vector<ProjPoint>{mk_point(x, power(x, d))};
                   });
}

CurveSpec CurveSpec::parabola() {
  return CurveSpec(CurveKind::parabola, "y=x^2", graph_form(2), true, [](const Rational& x) {
    return std::vector<ProjPoint>{mk_point(x, x * x)};
  });
}

CurveSpec CurveSpec::weierstrass(Rational a, Rational b) {
  WeierstrassCurve curve{std::move(a), std::move(b)};
  return CurveSpec(CurveKind::weierstrass,
                   "y^2=x^3+" + curve.a.get_str() + "x+" + curve.b.get_str(),
                   curve.form().as_form(), true,
                   [curve](const Rational& x) { return curve.lift(x); });
}

CurveSpec CurveSpec::line(const ProjLine& l) {
  require_non_vertical(l);
  return CurveSpec(CurveKind::line, "line " + to_string(l), TernaryForm::linear(l), true,
                   [l](const Rational& x) { return std::vector<ProjPoint>{point_on_line(l, x)}; });
}

CurveSpec CurveSpec::line_union(std::vector<ProjLine> lines) {
  if (lines.empty()) throw GeometryError("line union needs at least one line");
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  TernaryForm form = TernaryForm::linear(lines.front());
  std::string name = "lines";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    require_non_vertical(lines[i]);
    if (i > 0) form = form * TernaryForm::linear(lines[i]);
    name += " " + to_string(lines[i]);
  }
  const bool irreducible = lines.size() == 1;
  return CurveSpec(CurveKind::line_union, name, std::move(form), irreducible,
                   [lines](const Rational& x) {
                     std::vector<ProjPoint> out;
                     for (const auto& l : lines) {
                       ProjPoint p = point_on_line(l, x);
                       if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
                     }
                     return out;
                   });
}

CurveSpec CurveSpec::custom(std::string name, TernaryForm form, bool irreducible, Lifter lift) {
  if (form.is_zero()) throw GeometryError("custom curve needs a nonzero form");
  return CurveSpec(CurveKind::custom, std::move(name), std::move(form), irreducible,
                   std::move(lift));
}

std::vector<ProjPoint> CurveSpec::lift(const Rational& x) const {
  std::vector<ProjPoint> pts = lift_(x);
  for (const auto& p : pts) {
    if (!contains(p)) {
      throw InvariantViolation("lifted point " + to_string(p) + " is not on " + name_);
    }
  }
  return pts;
}

LiftedSample lift_sample(const CurveSpec& curve, const std::vector<Rational>& xs) {
  LiftedSample out;
  std::unordered_set<ProjPoint, HomogeneousHash> seen;
  for (const auto& x : xs) {
    auto pts = curve.lift(x);
    if (pts.empty()) {
      out.failed.push_back(x);
      continue;
    }
    for (auto& p : pts) {
      if (seen.insert(p).second) out.points.push_back(std::move(p));
    }
  }
  return out;
}

TripartiteResult tripartite_curve_count(const TripartiteExperiment& e,
                                        const EnumerationOptions& opts) {
  TripartiteResult result;
  std::vector<ProjPoint> all;
  std::vector<unsigned> mask;
  std::unordered_map<ProjPoint, std::size_t, HomogeneousHash> index;
  for (int c = 0; c < 3; ++c) {
    LiftedSample s = lift_sample(e.curves[c], e.samples[c]);
    result.failed[c] = std::move(s.failed);
    for (auto& p : s.points) {
      auto [it, fresh] = index.emplace(p, all.size());
      if (fresh) {
        all.push_back(std::move(p));
        mask.push_back(0);
      }
      mask[it->second] |= 1u << c;
    }
  }

  const PointSet set(std::move(all));
  for (const auto& li : rich_incidences(set, 3, opts)) {
    std::uint64_t single[3] = {0, 0, 0};
    std::uint64_t pair01 = 0, pair02 = 0, pair12 = 0, all3 = 0;
    for (auto idx : li.points) {
      const unsigned m = mask[idx];
      for (int c = 0; c < 3; ++c) single[c] += (m >> c) & 1u;
      pair01 += (m & 3u) == 3u;
      pair02 += (m & 5u) == 5u;
      pair12 += (m & 6u) == 6u;
      all3 += m == 7u;
    }
    for (int c = 0; c < 3; ++c) {
      const CurveSpec& curve = e.curves[c];
      if (curve.irreducible() && curve.degree() >= 2 &&
          single[c] > static_cast<std::uint64_t>(curve.degree())) {
        throw InvariantViolation("line " + to_string(li.line) + " carries " +
                                 std::to_string(single[c]) + " points of the degree " +
                                 std::to_string(curve.degree()) + " curve " + curve.name());
      }
    }
    const std::uint64_t triples = single[0] * single[1] * single[2] - pair01 * single[2] -
                                  pair02 * single[1] - pair12 * single[0] + 2 * all3;
    if (triples > 0) {
      result.collinear_triples += triples;
      ++result.distinct_lines;
    }
  }
  return result;
}

std::vector<Rational> integer_range(long lo, long hi) {
  std::vector<Rational> out;
  for (long x = lo; x <= hi; ++x) out.emplace_back(x);
  return out;
}

std::vector<DichotomyRow> dichotomy_experiment(const std::vector<int>& degrees,
                                               const std::vector<int>& sizes,
                                               const EnumerationOptions& opts) {
  std::vector<DichotomyRow> rows;
  for (int d : degrees) {
    const CurveSpec curve = CurveSpec::graph_power(d);
    for (int n : sizes) {
      if (n < 1) throw GeometryError("dichotomy sizes must be positive");
      const LiftedSample s = lift_sample(curve, integer_range(-n, n));
      const auto table = spanned_lines(PointSet(s.points), opts);
      DichotomyRow row;
      row.degree = d;
      row.n = n;
      row.sample_size = s.points.size();
      row.count = triple_line_count(table);
      const double big_n = static_cast<double>(row.sample_size);
      row.per_n2 = static_cast<double>(row.count) / (static_cast<double>(n) * n);
      row.ratio = static_cast<double>(row.count) / (big_n * big_n / 8.0);
      rows.push_back(row);
    }
  }
  return rows;
}

std::size_t quadruple_experiment(const CurveSpec& curve, const std::vector<Rational>& xs,
                                 const EnumerationOptions& opts) {
  const LiftedSample s = lift_sample(curve, xs);
  return k_rich_count(spanned_lines(PointSet(s.points), opts), 4, RichMode::at_least);
}

std::size_t few_directions_experiment(const CurveSpec& curve, const std::vector<Rational>& xs,
                                      const EnumerationOptions& opts) {
  const LiftedSample s = lift_sample(curve, xs);
  return direction_count(PointSet(s.points), opts);
}

}  // namespace orchard
