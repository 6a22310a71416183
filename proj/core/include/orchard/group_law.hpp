#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orchard/cubic.hpp"
#include "orchard/projective.hpp"
#include "orchard/rich_lines.hpp"

namespace orchard {

enum class GroupOp { additive, multiplicative };

/// Element of <Q, +> or <Q \ {0}, *>.
class GroupElement {
 public:
  static GroupElement additive(Rational v) { return GroupElement(std::move(v), GroupOp::additive); }
  static GroupElement multiplicative(Rational v);
  static GroupElement identity(GroupOp op);

  const Rational& value() const { return value_; }
  GroupOp op() const { return op_; }
  bool is_identity() const;

  GroupElement inverse() const;
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.op_ == b.op_ && a.value_ == b.value_;
  }

 private:
  GroupElement(Rational v, GroupOp op) : value_(std::move(v)), op_(op) {}
  Rational value_;
  GroupOp op_;
};

// --- cuspidal cubic y = x^3, parametrized by x --------------------------------

ProjPoint cuspidal_point(const Rational& t);
/// x-coordinate of a point of y = x^3. Throws GeometryError off the curve.
Rational cuspidal_param(const ProjPoint& p);
/// Parameter of the third point on the chord through parameters p != q.
Rational cuspidal_third(const Rational& p, const Rational& q);

// --- Weierstrass curves y^2 = x^3 + a x + b --------------------------------------

struct WeierstrassCurve {
  Rational a;
  Rational b;

  bool contains(const ProjPoint& p) const;
  /// The flex at infinity, (0 : 1 : 0).
  static ProjPoint identity();
  ProjPoint negate(const ProjPoint& p) const;
  /// Third intersection of the chord (tangent when p == q) with the curve.
  ProjPoint third(const ProjPoint& p, const ProjPoint& q) const;
  ProjPoint add(const ProjPoint& p, const ProjPoint& q) const;
  ProjPoint multiple(const ProjPoint& p, long k) const;
  /// Points above x with rational y (both signs, y >= 0 first).
  std::vector<ProjPoint> lift(const Rational& x) const;
  /// Y^2 Z - X^3 - a X Z^2 - b Z^3, scaled to integers.
  CubicForm form() const;
};

ProjPoint weierstrass_third(const WeierstrassCurve& c, const ProjPoint& p, const ProjPoint& q);
ProjPoint weierstrass_add(const WeierstrassCurve& c, const ProjPoint& p, const ProjPoint& q);

// --- reducible cubics ---------------------------------------------------------------

struct MenelausResult {
  std::array<GroupElement, 3> params;
  bool collinear_by_group;  // product == 1
};

/// u_i = X_i P_{i-1} / X_i P_{i+1} for X_i on the side P_{i-1}P_{i+1}
/// (multiplicative). X_1, X_2, X_3 are collinear iff u_1 u_2 u_3 = 1.
MenelausResult menelaus_params(const std::array<ProjPoint, 3>& triangle,
                               const std::array<ProjPoint, 3>& xs);

/// Points (x1, 0), (x2, 1), (x3, 2): f = (x1, -2 x2, x3), additive.
std::array<GroupElement, 3> parallel_lines_params(const Rational& x1, const Rational& x2,
                                                  const Rational& x3);

enum class ConicVariant { parabola, hyperbola };

/// Conic y = x^2 (additive) or xy = 1 (multiplicative) plus the line at
/// infinity: f(P) = p, f(Q) = q, f(d) = -slope(d).
std::array<GroupElement, 3> conic_line_params(ConicVariant variant, const ProjPoint& p,
                                              const ProjPoint& q, const ProjPoint& d);

// --- group descriptions ------------------------------------------------------------

enum class GroupKind {
  cuspidal_cubic,
  weierstrass,
  three_parallel_lines,
  triangle_menelaus,
  parabola_plus_infinity,
  hyperbola_plus_infinity,
  concurrent_lines,
};

std::string to_string(GroupKind k);

struct CurvePiece {
  std::string name;
  std::function<bool(const ProjPoint&)> contains;
  std::function<GroupElement(const ProjPoint&)> param;  // empty for weierstrass
};

/// Parametrized curve pieces and the slot pattern of the triples they
/// describe: three distinct points P_s on pieces[slots[s]] are collinear iff
/// f(P_1) + f(P_2) + f(P_3) is the identity.
struct GroupDescription {
  GroupKind kind;
  GroupOp op;
  std::vector<CurvePiece> pieces;
  std::array<int, 3> slots;  // sorted piece indices (0-based)
  std::optional<WeierstrassCurve> curve;

  /// Points given in slot order.
  bool sums_to_identity(const std::array<ProjPoint, 3>& pts) const;
};

GroupDescription cuspidal_description();
GroupDescription weierstrass_description(const WeierstrassCurve& c);
GroupDescription parallel_lines_description();
GroupDescription triangle_description(const std::array<ProjPoint, 3>& triangle);
GroupDescription parabola_plus_infinity_description();
GroupDescription hyperbola_plus_infinity_description();
/// Lines y = 0, y = x, x = 0 through the origin.
GroupDescription concurrent_lines_description();

struct VerifyReport {
  bool holds = true;
  std::size_t triples_checked = 0;
  std::size_t failures = 0;
  std::optional<std::array<std::size_t, 3>> first_failure;
};

/// Exhaustive check of "collinear iff group identity" over every triple of
/// distinct points whose labels (piece ids, 1-based) match the slot pattern.
/// Unlabelled sets are allowed for single-piece descriptions. Throws
/// GeometryError if a point is off its piece.
VerifyReport verify_group_description(const PointSet& config, const GroupDescription& desc);

struct SphereResult {
  bool on_sphere;
  Rational param_sum;
};

/// x^2 + y^2 + z^2 = 1 iff sum of (t^2 - 1/3) is zero.
SphereResult sphere_membership(const Rational& x, const Rational& y, const Rational& z);

}  // namespace orchard
