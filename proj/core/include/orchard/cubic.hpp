#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orchard/projective.hpp"

namespace orchard {

using Exponent = std::array<int, 3>;

/// Sparse homogeneous polynomial in X, Y, Z with rational coefficients.
/// Zero coefficients are never stored.
class TernaryForm {
 public:
  explicit TernaryForm(int degree) : degree_(degree) {}
  static TernaryForm linear(const ProjLine& l);

  int degree() const { return degree_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponent& e, const Rational& c);
  Rational coeff(const Exponent& e) const;
  Rational evaluate(const ProjPoint& p) const;

  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  /// Exact quotient by the linear form of l, or nullopt if l does not divide.
  std::optional<TernaryForm> divide_by(const ProjLine& l) const;

 private:
  int degree_;
  std::map<Exponent, Rational> terms_;
};

/// Ternary cubic with integer coefficients on the monomials
/// X^3, X^2Y, X^2Z, XY^2, XYZ, XZ^2, Y^3, Y^2Z, YZ^2, Z^3 (in this order),
/// primitive with first nonzero coefficient positive. Proportional cubics
/// therefore compare equal.
class CubicForm {
 public:
  static constexpr std::array<Exponent, 10> monomials{{{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0},
                                                       {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1},
                                                       {0, 1, 2}, {0, 0, 3}}};

  explicit CubicForm(std::array<Integer, 10> coeffs);
  explicit CubicForm(const TernaryForm& f);

  const std::array<Integer, 10>& coeffs() const { return c_; }
  Integer evaluate(const ProjPoint& p) const;
  TernaryForm as_form() const;
  std::string to_string() const;

  friend bool operator==(const CubicForm& a, const CubicForm& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CubicForm& a, const CubicForm& b) { return !(a == b); }

 private:
  std::array<Integer, 10> c_;
};

/// Values of the ten cubic monomials at p.
std::array<Integer, 10> monomial_row(const ProjPoint& p);

bool contains(const CubicForm& f, const ProjPoint& p);

/// Basis of all cubics through `points`: the rational nullspace of the
/// evaluation matrix, computed by fraction-free elimination. Empty iff no
/// nonzero cubic vanishes on every point.
std::vector<CubicForm> fit_cubics(std::span<const ProjPoint> points);

/// Some cubic through all points, if any exists.
std::optional<CubicForm> on_common_cubic(std::span<const ProjPoint> points);

bool line_divides(const CubicForm& f, const ProjLine& l);

enum class CubicClass { three_lines, line_plus_conic, no_candidate_factor };

struct Classification {
  CubicClass kind;
  std::vector<ProjLine> line_factors;
};

/// Splits off candidate lines that divide f. Irreducibility is never claimed:
/// a cubic with no dividing candidate is reported as such.
Classification classify_with_candidates(const CubicForm& f, std::span<const ProjLine> candidates);

std::string to_string(CubicClass c);

}  // namespace orchard
