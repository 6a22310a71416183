#include "orchard/group_law.hpp"

#include <algorithm>

namespace orchard {

GroupElement GroupElement::multiplicative(Rational v) {
  if (sgn(v) == 0) throw GeometryError("multiplicative group element must be nonzero");
  return GroupElement(std::move(v), GroupOp::multiplicative);
}

GroupElement GroupElement::identity(GroupOp op) {
  return GroupElement(Rational(op == GroupOp::additive ? 0 : 1), op);
}

bool GroupElement::is_identity() const {
  return op_ == GroupOp::additive ? sgn(value_) == 0 : value_ == 1;
}

GroupElement GroupElement::inverse() const {
  return op_ == GroupOp::additive ? GroupElement(-value_, op_) : GroupElement(1 / value_, op_);
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (a.op_ != b.op_) throw GeometryError("mixing additive and multiplicative elements");
  return a.op_ == GroupOp::additive ? GroupElement(a.value_ + b.value_, a.op_)
                                    : GroupElement(a.value_ * b.value_, a.op_);
}

// --- cuspidal ------------------------------------------------------------------

ProjPoint cuspidal_point(const Rational& t) { return mk_point(t, t * t * t); }

Rational cuspidal_param(const ProjPoint& p) {
  if (at_infinity(p)) throw GeometryError("point at infinity is not a regular point of y = x^3");
  const auto [x, y] = affine(p);
  if (y != x * x * x) throw GeometryError("point " + to_string(p) + " is not on y = x^3");
  return x;
}

Rational cuspidal_third(const Rational& p, const Rational& q) {
  if (p == q) throw GeometryError("cuspidal chord needs distinct parameters");
  return -p - q;
}

// --- Weierstrass -----------------------------------------------------------------

bool WeierstrassCurve::contains(const ProjPoint& p) const {
  const Rational x(p[0]), y(p[1]), z(p[2]);
  return y * y * z == x * x * x + a * x * z * z + b * z * z * z;
}

ProjPoint WeierstrassCurve::identity() { return ProjPoint(0, 1, 0); }

ProjPoint WeierstrassCurve::negate(const ProjPoint& p) const {
  return ProjPoint(p[0], -p[1], p[2]);
}

ProjPoint WeierstrassCurve::third(const ProjPoint& p, const ProjPoint& q) const {
  if (!contains(p)) throw GeometryError("point " + to_string(p) + " is not on the curve");
  if (!contains(q)) throw GeometryError("point " + to_string(q) + " is not on the curve");
  const ProjPoint o = identity();
  if (p == o && q == o) return o;  // the identity is a flex
  if (p == o) return negate(q);
  if (q == o) return negate(p);
  const auto [x1, y1] = affine(p);
  const auto [x2, y2] = affine(q);
  Rational slope;
  if (x1 == x2) {
    if (y1 == -y2) return o;  // vertical chord, or vertical tangent at y = 0
    slope = (3 * x1 * x1 + a) / (2 * y1);
  } else {
    slope = (y2 - y1) / (x2 - x1);
  }
  const Rational x3 = slope * slope - x1 - x2;
  const Rational y3 = y1 + slope * (x3 - x1);
  return mk_point(x3, y3);
}

ProjPoint WeierstrassCurve::add(const ProjPoint& p, const ProjPoint& q) const {
  return negate(third(p, q));
}

ProjPoint WeierstrassCurve::multiple(const ProjPoint& p, long k) const {
  ProjPoint base = k < 0 ? negate(p) : p;
  unsigned long m = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  ProjPoint acc = identity();
  while (m != 0) {
    if (m & 1UL) acc = add(acc, base);
    m >>= 1;
    if (m != 0) base = add(base, base);
  }
  return acc;
}

std::vector<ProjPoint> WeierstrassCurve::lift(const Rational& x) const {
  const Rational rhs = x * x * x + a * x + b;
  if (sgn(rhs) < 0) return {};
  if (!mpz_perfect_square_p(rhs.get_num_mpz_t()) || !mpz_perfect_square_p(rhs.get_den_mpz_t())) {
    return {};
  }
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), rhs.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), rhs.get_den_mpz_t());
  const Rational y(num, den);
  if (sgn(y) == 0) return {mk_point(x, y)};
  return {mk_point(x, y), mk_point(x, -y)};
}

CubicForm WeierstrassCurve::form() const {
  TernaryForm f(3);
  f.add({0, 2, 1}, Rational(1));
  f.add({3, 0, 0}, Rational(-1));
  f.add({1, 0, 2}, -a);
  f.add({0, 0, 3}, -b);
  return CubicForm(f);
}

ProjPoint weierstrass_third(const WeierstrassCurve& c, const ProjPoint& p, const ProjPoint& q) {
  return c.third(p, q);
}

ProjPoint weierstrass_add(const WeierstrassCurve& c, const ProjPoint& p, const ProjPoint& q) {
  return c.add(p, q);
}

// --- reducible cubics ------------------------------------------------------------

namespace {

const ProjPoint& vertex(const std::array<ProjPoint, 3>& t, int i) { return t[static_cast<std::size_t>(((i % 3) + 3) % 3)]; }

// Side i (0-based) joins the vertices before and after it.
ProjLine side_line(const std::array<ProjPoint, 3>& t, int i) {
  return join(vertex(t, i - 1), vertex(t, i + 1));
}

GroupElement menelaus_param(const std::array<ProjPoint, 3>& t, int i, const ProjPoint& x) {
  const ProjPoint& prev = vertex(t, i - 1);
  const ProjPoint& next = vertex(t, i + 1);
  if (x == prev || x == next) throw GeometryError("Menelaus point at a vertex");
  // XP_{i-1} / XP_{i+1} = -(P_{i-1}X / XP_{i+1})
  return GroupElement::multiplicative(-signed_ratio(x, prev, next));
}

// The sign convention is pinned against the determinant on one transversal
// and one non-collinear triple (the midpoints).
void check_menelaus_convention() {
  static const bool ok = [] {
    const std::array<ProjPoint, 3> t{mk_point(0, 0), mk_point(1, 0), mk_point(0, 1)};
    const std::array<ProjPoint, 3> transversal{mk_point(4, -3), mk_point(0, 3), mk_point(2, 0)};
    const std::array<ProjPoint, 3> mids{mk_point(Rational(1, 2), Rational(1, 2)),
                                        mk_point(0, Rational(1, 2)), mk_point(Rational(1, 2), 0)};
    auto product_is_one = [&](const std::array<ProjPoint, 3>& xs) {
      return (menelaus_param(t, 0, xs[0]) + menelaus_param(t, 1, xs[1]) + menelaus_param(t, 2, xs[2]))
          .is_identity();
    };
    return collinear(transversal[0], transversal[1], transversal[2]) && product_is_one(transversal) &&
           !collinear(mids[0], mids[1], mids[2]) && !product_is_one(mids);
  }();
  if (!ok) throw InvariantViolation("Menelaus sign convention matches the determinant");
}

}  // namespace

MenelausResult menelaus_params(const std::array<ProjPoint, 3>& triangle,
                               const std::array<ProjPoint, 3>& xs) {
  check_menelaus_convention();
  if (collinear(triangle[0], triangle[1], triangle[2])) {
    throw GeometryError("degenerate triangle");
  }
  std::array<GroupElement, 3> u{menelaus_param(triangle, 0, xs[0]),
                                menelaus_param(triangle, 1, xs[1]),
                                menelaus_param(triangle, 2, xs[2])};
  const bool ident = (u[0] + u[1] + u[2]).is_identity();
  return {u, ident};
}

std::array<GroupElement, 3> parallel_lines_params(const Rational& x1, const Rational& x2,
                                                  const Rational& x3) {
  return {GroupElement::additive(x1), GroupElement::additive(-2 * x2), GroupElement::additive(x3)};
}

namespace {

bool on_parabola(const ProjPoint& p) { return p[1] * p[2] == p[0] * p[0] && !at_infinity(p); }
bool on_hyperbola(const ProjPoint& p) { return p[0] * p[1] == p[2] * p[2] && !at_infinity(p); }

Rational direction_slope(const ProjPoint& d) {
  if (!at_infinity(d)) throw GeometryError("direction must be a point at infinity");
  if (sgn(d[0]) == 0) throw GeometryError("vertical direction has no group element");
  Rational s(d[1], d[0]);
  s.canonicalize();
  return s;
}

}  // namespace

std::array<GroupElement, 3> conic_line_params(ConicVariant variant, const ProjPoint& p,
                                              const ProjPoint& q, const ProjPoint& d) {
  if (p == q) throw GeometryError("conic chord needs distinct points");
  const Rational s = direction_slope(d);
  if (variant == ConicVariant::parabola) {
    if (!on_parabola(p) || !on_parabola(q)) throw GeometryError("point not on y = x^2");
    return {GroupElement::additive(affine(p)[0]), GroupElement::additive(affine(q)[0]),
            GroupElement::additive(-s)};
  }
  if (!on_hyperbola(p) || !on_hyperbola(q)) throw GeometryError("point not on xy = 1");
  if (sgn(s) == 0) throw GeometryError("horizontal direction is an asymptote of xy = 1");
  return {GroupElement::multiplicative(affine(p)[0]), GroupElement::multiplicative(affine(q)[0]),
          GroupElement::multiplicative(-s)};
}

// --- descriptions ----------------------------------------------------------------

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::cuspidal_cubic: return "cuspidal-cubic";
    case GroupKind::weierstrass: return "weierstrass";
    case GroupKind::three_parallel_lines: return "three-parallel-lines";
    case GroupKind::triangle_menelaus: return "triangle-menelaus";
    case GroupKind::parabola_plus_infinity: return "parabola-plus-infinity";
    case GroupKind::hyperbola_plus_infinity: return "hyperbola-plus-infinity";
    case GroupKind::concurrent_lines: return "concurrent-lines";
  }
  return "?";
}

bool GroupDescription::sums_to_identity(const std::array<ProjPoint, 3>& pts) const {
  if (curve) {
    return curve->add(curve->add(pts[0], pts[1]), pts[2]) == WeierstrassCurve::identity();
  }
  GroupElement acc = GroupElement::identity(op);
  for (std::size_t s = 0; s < 3; ++s) {
    acc = acc + pieces[static_cast<std::size_t>(slots[s])].param(pts[s]);
  }
  return acc.is_identity();
}

GroupDescription cuspidal_description() {
  CurvePiece piece{"y=x^3",
                   [](const ProjPoint& p) {
                     return !at_infinity(p) && p[1] * p[2] * p[2] == p[0] * p[0] * p[0];
                   },
                   [](const ProjPoint& p) { return GroupElement::additive(cuspidal_param(p)); }};
  return {GroupKind::cuspidal_cubic, GroupOp::additive, {piece}, {0, 0, 0}, std::nullopt};
}

GroupDescription weierstrass_description(const WeierstrassCurve& c) {
  CurvePiece piece{"weierstrass", [c](const ProjPoint& p) { return c.contains(p); }, {}};
  return {GroupKind::weierstrass, GroupOp::additive, {piece}, {0, 0, 0}, c};
}

GroupDescription parallel_lines_description() {
  std::vector<CurvePiece> pieces;
  for (int row = 0; row < 3; ++row) {
    const Rational weight = row == 1 ? Rational(-2) : Rational(1);
    pieces.push_back({"y=" + std::to_string(row),
                      [row](const ProjPoint& p) { return !at_infinity(p) && p[1] == row * p[2]; },
                      [weight](const ProjPoint& p) { return GroupElement::additive(weight * affine(p)[0]); }});
  }
  return {GroupKind::three_parallel_lines, GroupOp::additive, std::move(pieces), {0, 1, 2}, std::nullopt};
}

GroupDescription triangle_description(const std::array<ProjPoint, 3>& triangle) {
  check_menelaus_convention();
  if (collinear(triangle[0], triangle[1], triangle[2])) throw GeometryError("degenerate triangle");
  std::vector<CurvePiece> pieces;
  for (int i = 0; i < 3; ++i) {
    const ProjLine side = side_line(triangle, i);
    pieces.push_back({"side" + std::to_string(i + 1),
                      [side, triangle, i](const ProjPoint& p) {
                        return incident(p, side) && p != vertex(triangle, i - 1) && p != vertex(triangle, i + 1);
                      },
                      [triangle, i](const ProjPoint& p) { return menelaus_param(triangle, i, p); }});
  }
  return {GroupKind::triangle_menelaus, GroupOp::multiplicative, std::move(pieces), {0, 1, 2}, std::nullopt};
}

GroupDescription parabola_plus_infinity_description() {
  std::vector<CurvePiece> pieces;
  pieces.push_back({"y=x^2", on_parabola,
                    [](const ProjPoint& p) { return GroupElement::additive(affine(p)[0]); }});
  pieces.push_back({"infinity", [](const ProjPoint& p) { return at_infinity(p) && sgn(p[0]) != 0; },
                    [](const ProjPoint& p) { return GroupElement::additive(-direction_slope(p)); }});
  return {GroupKind::parabola_plus_infinity, GroupOp::additive, std::move(pieces), {0, 0, 1}, std::nullopt};
}

GroupDescription hyperbola_plus_infinity_description() {
  std::vector<CurvePiece> pieces;
  pieces.push_back({"xy=1", on_hyperbola,
                    [](const ProjPoint& p) { return GroupElement::multiplicative(affine(p)[0]); }});
  pieces.push_back({"infinity",
                    [](const ProjPoint& p) { return at_infinity(p) && sgn(p[0]) != 0 && sgn(p[1]) != 0; },
                    [](const ProjPoint& p) { return GroupElement::multiplicative(-direction_slope(p)); }});
  return {GroupKind::hyperbola_plus_infinity, GroupOp::multiplicative, std::move(pieces), {0, 0, 1},
          std::nullopt};
}

GroupDescription concurrent_lines_description() {
  // (X1:0:Z1), (X2:X2:Z2), (0:Y3:Z3) are collinear iff
  // Z1/X1 - Z2/X2 + Z3/Y3 = 0; the common point (0:0:1) is singular.
  auto ratio = [](const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  std::vector<CurvePiece> pieces;
  pieces.push_back({"y=0", [](const ProjPoint& p) { return sgn(p[1]) == 0 && sgn(p[0]) != 0; },
                    [ratio](const ProjPoint& p) { return GroupElement::additive(ratio(p[2], p[0])); }});
  pieces.push_back({"y=x", [](const ProjPoint& p) { return p[0] == p[1] && sgn(p[0]) != 0; },
                    [ratio](const ProjPoint& p) { return GroupElement::additive(-ratio(p[2], p[0])); }});
  pieces.push_back({"x=0", [](const ProjPoint& p) { return sgn(p[0]) == 0 && sgn(p[1]) != 0; },
                    [ratio](const ProjPoint& p) { return GroupElement::additive(ratio(p[2], p[1])); }});
  return {GroupKind::concurrent_lines, GroupOp::additive, std::move(pieces), {0, 1, 2}, std::nullopt};
}

VerifyReport verify_group_description(const PointSet& config, const GroupDescription& desc) {
  const std::size_t n = config.size();
  std::vector<int> piece(n, 0);
  if (config.has_labels()) {
    for (std::size_t i = 0; i < n; ++i) piece[i] = config.labels()[i] - 1;
  } else if (desc.pieces.size() != 1) {
    throw GeometryError("multi-piece description needs a labelled point set");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (piece[i] < 0 || static_cast<std::size_t>(piece[i]) >= desc.pieces.size()) {
      throw GeometryError("label " + std::to_string(piece[i] + 1) + " names no piece");
    }
    if (!desc.pieces[static_cast<std::size_t>(piece[i])].contains(config[i])) {
      throw GeometryError("point " + to_string(config[i]) + " is off its piece " +
                          desc.pieces[static_cast<std::size_t>(piece[i])].name);
    }
  }

  VerifyReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::array<std::size_t, 3> idx{i, j, k};
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return piece[a] < piece[b]; });
        if (piece[idx[0]] != desc.slots[0] || piece[idx[1]] != desc.slots[1] ||
            piece[idx[2]] != desc.slots[2]) {
          continue;
        }
        const std::array<ProjPoint, 3> pts{config[idx[0]], config[idx[1]], config[idx[2]]};
        ++report.triples_checked;
        if (collinear(pts[0], pts[1], pts[2]) != desc.sums_to_identity(pts)) {
          ++report.failures;
          if (!report.first_failure) report.first_failure = std::array<std::size_t, 3>{i, j, k};
        }
      }
    }
  }
  report.holds = report.failures == 0;
  return report;
}

SphereResult sphere_membership(const Rational& x, const Rational& y, const Rational& z) {
  const Rational third(1, 3);
  const Rational sum = (x * x - third) + (y * y - third) + (z * z - third);
  return {x * x + y * y + z * z == 1, sum};
}

}  // namespace orchard
