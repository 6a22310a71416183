#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "orchard/errors.hpp"

namespace orchard {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

// Divides out the content of a nonzero integer triple and makes the first
// nonzero entry positive. Throws GeometryError on the zero triple.
void canonicalize(std::array<Integer, 3>& v, const char* what);

}  // namespace detail

/// A homogeneous integer triple in canonical form: primitive, first nonzero
/// entry positive. Equality of canonical triples is projective equality.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous(Integer x, Integer y, Integer z) : c_{std::move(x), std::move(y), std::move(z)} {
    detail::canonicalize(c_, Tag::name);
  }
  explicit Homogeneous(std::array<Integer, 3> c) : c_(std::move(c)) {
    detail::canonicalize(c_, Tag::name);
  }

  const Integer& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Integer, 3>& coords() const { return c_; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
  }
  friend bool operator!=(const Homogeneous& a, const Homogeneous& b) { return !(a == b); }
  // Lexicographic on the signed canonical entries.
  friend bool operator<(const Homogeneous& a, const Homogeneous& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      int s = cmp(a.c_[i], b.c_[i]);
      if (s != 0) return s < 0;
    }
    return false;
  }

 private:
  std::array<Integer, 3> c_;
};

struct PointTag {
  static constexpr const char* name = "point";
};
struct LineTag {
  static constexpr const char* name = "line";
};

/// Point of the real projective plane, (X : Y : Z).
using ProjPoint = Homogeneous<PointTag>;
/// Line aX + bY + cZ = 0, stored as (a : b : c).
using ProjLine = Homogeneous<LineTag>;

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

ProjPoint mk_point(const Rational& x, const Rational& y);
inline bool at_infinity(const ProjPoint& p) { return sgn(p[2]) == 0; }
/// Affine coordinates of a finite point. Throws GeometryError at infinity.
std::array<Rational, 2> affine(const ProjPoint& p);

/// The line Z = 0.
ProjLine line_at_infinity();
/// The point at infinity of a line (its direction).
ProjPoint direction_of(const ProjLine& l);

Integer det3(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);
bool incident(const ProjPoint& p, const ProjLine& l);

Rational det(const Matrix3& m);
ProjPoint apply_transform(const Matrix3& m, const ProjPoint& p);
/// Image of a line under the point map m, i.e. the line (m^{-1})^T l.
ProjLine apply_transform(const Matrix3& m, const ProjLine& l);
Matrix3 inverse(const Matrix3& m);
/// Some nonsingular transform carrying l onto the line at infinity.
Matrix3 transform_sending_to_infinity(const ProjLine& l);

/// Signed affine ratio AX/XB of a point X on the line AB, so that X is the
/// affine combination (A + r B) / (1 + r). A point at infinity gives -1.
/// A and B must be finite and distinct; X must lie on AB and differ from B.
Rational signed_ratio(const ProjPoint& x, const ProjPoint& a, const ProjPoint& b);
/// Inverse of signed_ratio: the point X on AB with AX/XB = r (r != -1 gives a
/// finite point, r == -1 the direction of AB).
ProjPoint point_with_ratio(const ProjPoint& a, const ProjPoint& b, const Rational& r);

std::string to_string(const ProjPoint& p);
std::string to_string(const ProjLine& l);
std::ostream& operator<<(std::ostream& os, const ProjPoint& p);
std::ostream& operator<<(std::ostream& os, const ProjLine& l);

/// Scales a rational triple to a primitive integer triple (used for homogeneous
/// images of rational matrices).
std::array<Integer, 3> clear_denominators(const std::array<Rational, 3>& v);

struct HomogeneousHash {
  template <class Tag>
  std::size_t operator()(const Homogeneous<Tag>& h) const noexcept {
    std::size_t seed = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < 3; ++i) {
      const mpz_srcptr z = h[i].get_mpz_t();
      std::size_t v = z->_mp_size == 0 ? 0 : static_cast<std::size_t>(z->_mp_d[0]);
      v ^= static_cast<std::size_t>(static_cast<long>(z->_mp_size)) << 48;
      seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};

}  // namespace orchard
