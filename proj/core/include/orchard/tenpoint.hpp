#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "orchard/cubic.hpp"
#include "orchard/group_law.hpp"
#include "orchard/projective.hpp"

namespace orchard {

struct CuspidalCurve {};
using CubicCurve = std::variant<CuspidalCurve, WeierstrassCurve>;

bool on_curve(const CubicCurve& c, const ProjPoint& p);
CubicForm curve_form(const CubicCurve& c);
ProjPoint chord_third(const CubicCurve& c, const ProjPoint& p, const ProjPoint& q);

/// <A0, A1, A2, B1, B2, B3, B4, C0, C1, C2>. B0 is kept for reference but is
/// not one of the ten points.
struct TenPointConfig {
  std::array<ProjPoint, 3> a;  // A0..A2
  std::array<ProjPoint, 4> b;  // B1..B4
  std::array<ProjPoint, 3> c;  // C0..C2
  ProjPoint b0;
  std::optional<CubicCurve> curve;
  /// f(A0), f(B0), f(C0), delta for the cuspidal parametrization.
  std::optional<std::array<GroupElement, 4>> params;

  const ProjPoint& A(int i) const { return a.at(static_cast<std::size_t>(i)); }
  const ProjPoint& B(int j) const { return b.at(static_cast<std::size_t>(j - 1)); }
  const ProjPoint& C(int k) const { return c.at(static_cast<std::size_t>(k)); }
  /// The ten points in the order A0 A1 A2 B1 B2 B3 B4 C0 C1 C2.
  std::vector<ProjPoint> points() const;
};

struct CuspidalBase {
  Rational a0, b0, c0;  // parameters of A0, B0, C0; must sum to zero
  Rational delta;
};

struct WeierstrassBase {
  WeierstrassCurve curve;
  ProjPoint a0, b0, c0;  // collinear points of the curve
  ProjPoint delta;       // B1 = B0 + delta in the group law
};

/// Builds the configuration by chord-third steps on the curve. Throws
/// GeometryError when the base is not collinear, delta is the identity, or
/// two of the ten predicted points coincide.
TenPointConfig build_tenpoint(const CuspidalBase& base);
TenPointConfig build_tenpoint(const WeierstrassBase& base);

/// A_i (i >= 0), B_j (j >= 1), C_k (k >= 0) extended from a ten point
/// configuration by intersections only.
class Cantilever {
 public:
  explicit Cantilever(const TenPointConfig& cfg);

  const ProjPoint& A(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  const ProjPoint& B(int j) const { return b_.at(static_cast<std::size_t>(j - 1)); }
  const ProjPoint& C(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  int max_a() const { return static_cast<int>(a_.size()) - 1; }
  int max_b() const { return static_cast<int>(b_.size()); }
  int max_c() const { return static_cast<int>(c_.size()) - 1; }
  int extension() const { return max_b() - 4; }

  std::vector<ProjPoint> points() const;

 private:
  friend Cantilever extend_cantilever(const TenPointConfig& cfg, int m);
  std::vector<ProjPoint> a_, b_, c_;
};

/// Runs m steps of: C_i = A0B_i . A1B_{i+1}, A_i = C0B_i . C1B_{i+1},
/// B_{i+2} = A2C_i . C2A_i for i = 3, ..., m + 2. The curve is never used.
/// When a defining line is undefined because two stored points coincide, the
/// point is taken as the meet of two other stored lattice lines through it
/// (C_i on A_a B_{a+i}, A_i on C_c B_{c+i}, B_j on A_a C_{j-a}). Throws
/// GeometryError naming i when no two distinct lines are available.
Cantilever extend_cantilever(const TenPointConfig& cfg, int m);

/// Index triples whose points are not pairwise distinct are not triples of the
/// configuration; they are counted in `coincident` and otherwise skipped.
struct LatticeReport {
  bool holds = true;
  std::size_t triples_checked = 0;
  std::size_t coincident = 0;
  std::size_t failures = 0;
  std::optional<std::array<int, 3>> first_failure;  // (i, j, k)
};

/// Checks collinear(A_i, B_j, C_k) <=> i + k = j over every stored index.
LatticeReport lattice_report(const Cantilever& cl);
bool verify_lattice(const Cantilever& cl);
bool verify_lattice(const TenPointConfig& cfg);

struct NinePointReport {
  bool holds = false;
  std::vector<CubicForm> basis;  // cubics through the nine points other than B3
  bool all_vanish_at_b3 = false;
  bool witness_is_b3 = false;    // C1A2 . C2A1 == B3
};

NinePointReport nine_point_report(const TenPointConfig& cfg);
bool nine_point_check(const TenPointConfig& cfg);

// --- parameter halving on continuous arcs (floating point) --------------------

struct Point2 {
  double x;
  double y;
};

/// Graph of a continuous function on [lo, hi].
struct SampledArc {
  double lo;
  double hi;
  std::function<double(double)> f;
  Point2 at(double x) const { return {x, f(x)}; }
};

/// Arcs alpha < beta < gamma near x = 0.
struct StandardSystem {
  SampledArc alpha, beta, gamma;
};

/// Samples conditions (ii) and (iii) of a standard system on the common
/// interval; throws GeometryError on violation.
void check_standard_system(const StandardSystem& s, int samples = 33);

/// B(P) for P = (x, beta(x)): A(P) on alpha via C0, C(P) on gamma via A0,
/// then the line A(P)C(P) cut with beta.
Point2 construct_b(const StandardSystem& s, double x);

struct HalvingResult {
  Point2 p;
  Point2 constructed_b;
  int iterations;
};

/// Finds P on beta with B(P) = target by bisection. Throws GeometryError if
/// it does not converge to `tolerance` within `max_iterations`.
HalvingResult halve_parameter(const StandardSystem& s, Point2 target, double tolerance = 1e-10,
                              int max_iterations = 200);

}  // namespace orchard
