#include "orchard/projective.hpp"

#include <ostream>
#include <sstream>

namespace orchard {

namespace detail {

void canonicalize(std::array<Integer, 3>& v, const char* what) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), v[0].get_mpz_t(), v[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[2].get_mpz_t());
  if (sgn(g) == 0) throw GeometryError(std::string("zero homogeneous triple for ") + what);
  const int lead = sgn(v[0]) != 0 ? sgn(v[0]) : sgn(v[1]) != 0 ? sgn(v[1]) : sgn(v[2]);
  if (lead < 0) g = -g;
  if (g != 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace detail

namespace {

std::array<Integer, 3> cross(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const std::array<Integer, 3>& v) {
  return sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0;
}

}  // namespace

std::array<Integer, 3> clear_denominators(const std::array<Rational, 3>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::array<Integer, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
  }
  return out;
}

ProjPoint mk_point(const Rational& x, const Rational& y) {
  return ProjPoint(clear_denominators({x, y, Rational(1)}));
}

std::array<Rational, 2> affine(const ProjPoint& p) {
  if (at_infinity(p)) throw GeometryError("affine coordinates requested for a point at infinity");
  Rational x(p[0], p[2]);
  Rational y(p[1], p[2]);
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

ProjLine line_at_infinity() { return ProjLine(0, 0, 1); }

ProjPoint direction_of(const ProjLine& l) { return ProjPoint(l[1], -l[0], 0); }

Integer det3(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
         p[2] * (q[0] * r[1] - q[1] * r[0]);
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return sgn(det3(p, q, r)) == 0;
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  auto c = cross(p.coords(), q.coords());
  if (is_zero(c)) throw GeometryError("degenerate join: identical points " + to_string(p));
  return ProjLine(std::move(c));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  auto c = cross(l.coords(), m.coords());
  if (is_zero(c)) throw GeometryError("degenerate meet: identical lines " + to_string(l));
  return ProjPoint(std::move(c));
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  return sgn(p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) == 0;
}

Rational det(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 inverse(const Matrix3& m) {
  const Rational d = det(m);
  if (sgn(d) == 0) throw GeometryError("singular transform");
  Matrix3 inv;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // adjugate: cofactor of (j, i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / d;
    }
  }
  return inv;
}

ProjPoint apply_transform(const Matrix3& m, const ProjPoint& p) {
  if (sgn(det(m)) == 0) throw GeometryError("singular transform");
  std::array<Rational, 3> img;
  for (std::size_t i = 0; i < 3; ++i) {
    img[i] = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
  }
  return ProjPoint(clear_denominators(img));
}

ProjLine apply_transform(const Matrix3& m, const ProjLine& l) {
  const Matrix3 inv = inverse(m);
  std::array<Rational, 3> img;
  for (std::size_t i = 0; i < 3; ++i) {
    img[i] = inv[0][i] * l[0] + inv[1][i] * l[1] + inv[2][i] * l[2];
  }
  return ProjLine(clear_denominators(img));
}

Matrix3 transform_sending_to_infinity(const ProjLine& l) {
  // Third row = l, so that l . p = 0 iff the image has Z = 0.
  const std::array<std::array<int, 3>, 3> basis{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      Matrix3 m;
      for (std::size_t k = 0; k < 3; ++k) {
        m[0][k] = basis[i][k];
        m[1][k] = basis[j][k];
        m[2][k] = Rational(l[k]);
      }
      if (sgn(det(m)) != 0) return m;
    }
  }
  throw InvariantViolation("a nonzero line completes to a basis");
}

Rational signed_ratio(const ProjPoint& x, const ProjPoint& a, const ProjPoint& b) {
  if (at_infinity(a) || at_infinity(b)) {
    throw GeometryError("signed ratio needs finite endpoints");
  }
  if (a == b) throw GeometryError("signed ratio on a degenerate segment");
  if (x == b) throw GeometryError("signed ratio undefined at the far endpoint");
  // Representatives with Z = 1 (scaled by the other's Z to stay integral):
  // X ~ a' + r b'  <=>  (X x a') + r (X x b') = 0.
  std::array<Integer, 3> ra{a[0] * b[2], a[1] * b[2], a[2] * b[2]};
  std::array<Integer, 3> rb{b[0] * a[2], b[1] * a[2], b[2] * a[2]};
  const auto xa = cross(x.coords(), ra);
  const auto xb = cross(x.coords(), rb);
  std::size_t k = 0;
  while (k < 3 && sgn(xb[k]) == 0) ++k;
  if (k == 3) throw GeometryError("signed ratio undefined at the far endpoint");
  Rational r(-xa[k], xb[k]);
  r.canonicalize();
  for (std::size_t i = 0; i < 3; ++i) {
    if (xa[i] * r.get_den() + r.get_num() * xb[i] != 0) {
      throw GeometryError("signed ratio: point " + to_string(x) + " is not on the line");
    }
  }
  return r;
}

ProjPoint point_with_ratio(const ProjPoint& a, const ProjPoint& b, const Rational& r) {
  if (at_infinity(a) || at_infinity(b)) {
    throw GeometryError("ratio points need finite endpoints");
  }
  if (a == b) throw GeometryError("ratio point on a degenerate segment");
  const auto pa = affine(a);
  const auto pb = affine(b);
  // den * (A + r B) with A, B normalized to Z = 1
  std::array<Rational, 3> v{pa[0] + r * pb[0], pa[1] + r * pb[1], 1 + r};
  return ProjPoint(clear_denominators(v));
}

namespace {
template <class Tag>
std::string triple_string(const Homogeneous<Tag>& h) {
  std::ostringstream os;
  os << '(' << h[0] << ", " << h[1] << ", " << h[2] << ')';
  return os.str();
}
}  // namespace

std::string to_string(const ProjPoint& p) { return triple_string(p); }
std::string to_string(const ProjLine& l) { return triple_string(l); }
std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const ProjLine& l) { return os << to_string(l); }

}  // namespace orchard
