#include "orchard/tenpoint.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace orchard {

bool on_curve(const CubicCurve& c, const ProjPoint& p) {
  if (const auto* w = std::get_if<WeierstrassCurve>(&c)) return w->contains(p);
  return p[1] * p[2] * p[2] == p[0] * p[0] * p[0];
}

CubicForm curve_form(const CubicCurve& c) {
  if (const auto* w = std::get_if<WeierstrassCurve>(&c)) return w->form();
  TernaryForm f(3);
  f.add({3, 0, 0}, Rational(1));
  f.add({0, 1, 2}, Rational(-1));
  return CubicForm(f);
}

ProjPoint chord_third(const CubicCurve& c, const ProjPoint& p, const ProjPoint& q) {
  if (const auto* w = std::get_if<WeierstrassCurve>(&c)) return w->third(p, q);
  return cuspidal_point(cuspidal_third(cuspidal_param(p), cuspidal_param(q)));
}

std::vector<ProjPoint> TenPointConfig::points() const {
  return {a[0], a[1], a[2], b[0], b[1], b[2], b[3], c[0], c[1], c[2]};
}

namespace {

// Defining chords; B3 uses A1C2 and the line A2B3C1 is a consequence.
TenPointConfig chord_chain(const CubicCurve& curve, const ProjPoint& a0, const ProjPoint& b0,
                           const ProjPoint& c0, const ProjPoint& b1) {
  auto t = [&](const ProjPoint& p, const ProjPoint& q) { return chord_third(curve, p, q); };
  const ProjPoint a1 = t(b1, c0);
  const ProjPoint c1 = t(b1, a0);
  const ProjPoint b2 = t(a1, c1);
  const ProjPoint a2 = t(b2, c0);
  const ProjPoint c2 = t(b2, a0);
  const ProjPoint b3 = t(a1, c2);
  const ProjPoint b4 = t(a2, c2);
  return TenPointConfig{{a0, a1, a2}, {b1, b2, b3, b4}, {c0, c1, c2}, b0, curve, std::nullopt};
}

template <class T>
void require_distinct(const std::vector<T>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) throw GeometryError(std::string("delta too special: coincident ") + what);
    }
  }
}

void require_match(const std::vector<ProjPoint>& built, const std::vector<ProjPoint>& predicted) {
  for (std::size_t i = 0; i < built.size(); ++i) {
    if (built[i] != predicted[i]) {
      throw InvariantViolation("chord construction agrees with group parameters (point " +
                               std::to_string(i) + ")");
    }
  }
}

}  // namespace

TenPointConfig build_tenpoint(const CuspidalBase& base) {
  if (sgn(base.a0 + base.b0 + base.c0) != 0) throw GeometryError("base parameters must sum to zero");
  if (base.a0 == base.b0 || base.b0 == base.c0 || base.a0 == base.c0) {
    throw GeometryError("base points must be distinct");
  }
  if (sgn(base.delta) == 0) throw GeometryError("delta must not be the identity");
  const Rational& d = base.delta;
  std::vector<Rational> predicted{base.a0,         base.a0 - d,     base.a0 - 2 * d, base.b0 + d,
                                  base.b0 + 2 * d, base.b0 + 3 * d, base.b0 + 4 * d, base.c0,
                                  base.c0 - d,     base.c0 - 2 * d};
  require_distinct(predicted, "parameters");

  TenPointConfig cfg = chord_chain(CuspidalCurve{}, cuspidal_point(base.a0), cuspidal_point(base.b0),
                                   cuspidal_point(base.c0), cuspidal_point(base.b0 + d));
  std::vector<ProjPoint> expected;
  for (const auto& t : predicted) expected.push_back(cuspidal_point(t));
  require_match(cfg.points(), expected);
  cfg.params = std::array<GroupElement, 4>{GroupElement::additive(base.a0), GroupElement::additive(base.b0),
                                           GroupElement::additive(base.c0), GroupElement::additive(d)};
  return cfg;
}

TenPointConfig build_tenpoint(const WeierstrassBase& base) {
  const WeierstrassCurve& e = base.curve;
  for (const auto* p : {&base.a0, &base.b0, &base.c0, &base.delta}) {
    if (!e.contains(*p)) throw GeometryError("point " + to_string(*p) + " is not on the curve");
  }
  const ProjPoint o = WeierstrassCurve::identity();
  if (base.a0 == base.b0 || base.b0 == base.c0 || base.a0 == base.c0) {
    throw GeometryError("base points must be distinct");
  }
  if (e.add(e.add(base.a0, base.b0), base.c0) != o) throw GeometryError("base points are not collinear");
  if (base.delta == o) throw GeometryError("delta must not be the identity");

  const ProjPoint& d = base.delta;
  const ProjPoint nd = e.negate(d);
  std::vector<ProjPoint> predicted{base.a0,
                                   e.add(base.a0, nd),
                                   e.add(base.a0, e.multiple(d, -2)),
                                   e.add(base.b0, d),
                                   e.add(base.b0, e.multiple(d, 2)),
                                   e.add(base.b0, e.multiple(d, 3)),
                                   e.add(base.b0, e.multiple(d, 4)),
                                   base.c0,
                                   e.add(base.c0, nd),
                                   e.add(base.c0, e.multiple(d, -2))};
  for (const auto& p : predicted) {
    if (p == o) throw GeometryError("delta too special: a point of the configuration is at infinity");
  }
  require_distinct(predicted, "points");

  TenPointConfig cfg = chord_chain(e, base.a0, base.b0, base.c0, predicted[3]);
  require_match(cfg.points(), predicted);
  return cfg;
}

Cantilever::Cantilever(const TenPointConfig& cfg)
    : a_(cfg.a.begin(), cfg.a.end()), b_(cfg.b.begin(), cfg.b.end()), c_(cfg.c.begin(), cfg.c.end()) {}

std::vector<ProjPoint> Cantilever::points() const {
  std::vector<ProjPoint> out(a_);
  out.insert(out.end(), b_.begin(), b_.end());
  out.insert(out.end(), c_.begin(), c_.end());
  return out;
}

namespace {

// Partially built cantilever: slots fill in as soon as two distinct stored
// lattice lines pass through them.
struct Scaffold {
  std::vector<std::optional<ProjPoint>> a, b, c;  // b[j] holds B_j; b[0] unused

  static const ProjPoint* at(const std::vector<std::optional<ProjPoint>>& v, int i) {
    if (i < 0 || i >= static_cast<int>(v.size()) || !v[static_cast<std::size_t>(i)]) return nullptr;
    return &*v[static_cast<std::size_t>(i)];
  }

  // Meet of the first two distinct lines p_t q_t, t = 0, 1, ...
  template <class Pairs>
  std::optional<ProjPoint> meet_first_two(const Pairs& pairs) const {
    std::optional<ProjLine> first;
    for (const auto& [p, q] : pairs) {
      if (p == nullptr || q == nullptr || *p == *q) continue;
      const ProjLine l = join(*p, *q);
      if (!first) {
        first = l;
      } else if (l != *first) {
        return meet(*first, l);
      }
    }
    return std::nullopt;
  }

  std::optional<ProjPoint> solve_c(int k) const {
    std::vector<std::pair<const ProjPoint*, const ProjPoint*>> pairs;
    for (int t = 0; t < static_cast<int>(a.size()); ++t) pairs.emplace_back(at(a, t), at(b, t + k));
    return meet_first_two(pairs);
  }
  std::optional<ProjPoint> solve_a(int i) const {
    std::vector<std::pair<const ProjPoint*, const ProjPoint*>> pairs;
    for (int t = 0; t < static_cast<int>(c.size()); ++t) pairs.emplace_back(at(c, t), at(b, t + i));
    return meet_first_two(pairs);
  }
  std::optional<ProjPoint> solve_b(int j) const {
    std::vector<std::pair<const ProjPoint*, const ProjPoint*>> pairs;
    if (j >= 2) {
      pairs.emplace_back(at(a, 2), at(c, j - 2));
      pairs.emplace_back(at(c, 2), at(a, j - 2));
    }
    for (int t = 0; t <= j; ++t) {
      if (t != 2 && t != j - 2) pairs.emplace_back(at(a, t), at(c, j - t));
    }
    return meet_first_two(pairs);
  }
};

}  // namespace

Cantilever extend_cantilever(const TenPointConfig& cfg, int m) {
  if (m < 0) throw GeometryError("extension length must be non-negative");
  const int top = m + 2;
  Scaffold sc;
  sc.a.resize(static_cast<std::size_t>(top + 1));
  sc.c.resize(static_cast<std::size_t>(top + 1));
  sc.b.resize(static_cast<std::size_t>(top + 3));
  for (int i = 0; i < 3; ++i) {
    sc.a[static_cast<std::size_t>(i)] = cfg.A(i);
    sc.c[static_cast<std::size_t>(i)] = cfg.C(i);
  }
  for (int j = 1; j <= 4; ++j) sc.b[static_cast<std::size_t>(j)] = cfg.B(j);

  // Step i adds C_i, A_i and B_{i+2}. Sweeping in step order reproduces the
  // defining recursion; later sweeps fill slots whose defining lines were
  // undefined.
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 3; i <= top; ++i) {
      auto fill = [&](std::optional<ProjPoint>& slot, auto solve) {
        if (slot) return;
        if (auto p = solve()) {
          slot = *p;
          progress = true;
        }
      };
      fill(sc.c[static_cast<std::size_t>(i)], [&] { return sc.solve_c(i); });
      fill(sc.a[static_cast<std::size_t>(i)], [&] { return sc.solve_a(i); });
      fill(sc.b[static_cast<std::size_t>(i + 2)], [&] { return sc.solve_b(i + 2); });
    }
  }

  Cantilever cl(cfg);
  for (int i = 3; i <= top; ++i) {
    const char* missing = !sc.c[static_cast<std::size_t>(i)]   ? "C_i"
                          : !sc.a[static_cast<std::size_t>(i)] ? "A_i"
                          : !sc.b[static_cast<std::size_t>(i + 2)] ? "B_{i+2}"
                                                                   : nullptr;
    if (missing != nullptr) {
      throw GeometryError("cantilever step i=" + std::to_string(i) +
                          ": degenerate meet, no two distinct lattice lines through " + missing);
    }
    cl.c_.push_back(*sc.c[static_cast<std::size_t>(i)]);
    cl.a_.push_back(*sc.a[static_cast<std::size_t>(i)]);
    cl.b_.push_back(*sc.b[static_cast<std::size_t>(i + 2)]);
  }
  return cl;
}

LatticeReport lattice_report(const Cantilever& cl) {
  LatticeReport r;
  for (int i = 0; i <= cl.max_a(); ++i) {
    for (int j = 1; j <= cl.max_b(); ++j) {
      for (int k = 0; k <= cl.max_c(); ++k) {
        const ProjPoint& a = cl.A(i);
        const ProjPoint& b = cl.B(j);
        const ProjPoint& c = cl.C(k);
        if (a == b || b == c || a == c) {
          ++r.coincident;
          continue;
        }
        ++r.triples_checked;
        if (collinear(a, b, c) != (i + k == j)) {
          ++r.failures;
          if (!r.first_failure) r.first_failure = std::array<int, 3>{i, j, k};
        }
      }
    }
  }
  r.holds = r.failures == 0;
  return r;
}

bool verify_lattice(const Cantilever& cl) { return lattice_report(cl).holds; }
bool verify_lattice(const TenPointConfig& cfg) { return verify_lattice(Cantilever(cfg)); }

NinePointReport nine_point_report(const TenPointConfig& cfg) {
  NinePointReport r;
  std::vector<ProjPoint> nine;
  const auto ten = cfg.points();
  for (std::size_t i = 0; i < ten.size(); ++i) {
    if (i != 5) nine.push_back(ten[i]);  // index 5 is B3
  }
  r.basis = fit_cubics(nine);
  r.all_vanish_at_b3 = std::all_of(r.basis.begin(), r.basis.end(),
                                   [&](const CubicForm& f) { return contains(f, cfg.B(3)); });
  try {
    r.witness_is_b3 = meet(join(cfg.C(1), cfg.A(2)), join(cfg.C(2), cfg.A(1))) == cfg.B(3);
  } catch (const GeometryError&) {
    r.witness_is_b3 = false;
  }
  r.holds = r.all_vanish_at_b3 && r.witness_is_b3;
  return r;
}

bool nine_point_check(const TenPointConfig& cfg) { return nine_point_report(cfg).holds; }

}  // namespace orchard
