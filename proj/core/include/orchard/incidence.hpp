#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orchard/cubic.hpp"
#include "orchard/projective.hpp"
#include "orchard/rich_lines.hpp"

namespace orchard {

enum class CurveKind { graph_power, weierstrass, line, parabola, line_union, custom };

/// A plane curve that can lift sample x-coordinates to points on it.
class CurveSpec {
 public:
  using Lifter = std::function<std::vector<ProjPoint>(const Rational&)>;

  static CurveSpec graph_power(int d);  // y = x^d, d >= 1
  static CurveSpec weierstrass(Rational a, Rational b);
  static CurveSpec line(const ProjLine& l);  // l must not be vertical or at infinity
  static CurveSpec parabola();  // y = x^2
  static CurveSpec line_union(std::vector<ProjLine> lines);
  /// `form` is the homogenized defining polynomial; every lifted point is
  /// checked against it.
  static CurveSpec custom(std::string name, TernaryForm form, bool irreducible, Lifter lift);

  CurveKind kind() const { return kind_; }
  int degree() const { return form_.degree(); }
  bool irreducible() const { return irreducible_; }
  const std::string& name() const { return name_; }
  const TernaryForm& form() const { return form_; }

  bool contains(const ProjPoint& p) const { return sgn(form_.evaluate(p)) == 0; }
  /// Points of the curve above x (possibly none). Throws InvariantViolation if
  /// the lifting rule produces a point off the curve.
  std::vector<ProjPoint> lift(const Rational& x) const;

 private:
  CurveSpec(CurveKind kind, std::string name, TernaryForm form, bool irreducible, Lifter lift);

  CurveKind kind_;
  std::string name_;
  TernaryForm form_;
  bool irreducible_;
  Lifter lift_;
};

struct LiftedSample {
  std::vector<ProjPoint> points;
  std::vector<Rational> failed;  // x-values with no rational point above them
};

LiftedSample lift_sample(const CurveSpec& curve, const std::vector<Rational>& xs);

struct TripartiteExperiment {
  std::array<CurveSpec, 3> curves;
  std::array<std::vector<Rational>, 3> samples;
};

struct TripartiteResult {
  std::uint64_t collinear_triples = 0;  // ordered (P1, P2, P3) in S1 x S2 x S3, distinct, collinear
  std::size_t distinct_lines = 0;       // lines carrying at least one such triple
  std::array<std::vector<Rational>, 3> failed;
};

TripartiteResult tripartite_curve_count(const TripartiteExperiment& e,
                                        const EnumerationOptions& opts = {});

/// {lo, lo + 1, ..., hi}.
std::vector<Rational> integer_range(long lo, long hi);

struct DichotomyRow {
  int degree = 0;
  int n = 0;
  std::size_t sample_size = 0;  // N = 2n + 1
  std::size_t count = 0;        // lines with >= 3 points of {(x, x^d) : |x| <= n}
  double per_n2 = 0;            // count / n^2
  double ratio = 0;             // count / (N^2 / 8)
};

std::vector<DichotomyRow> dichotomy_experiment(const std::vector<int>& degrees,
                                               const std::vector<int>& sizes,
                                               const EnumerationOptions& opts = {});

/// Lines containing at least four lifted sample points.
std::size_t quadruple_experiment(const CurveSpec& curve, const std::vector<Rational>& xs,
                                 const EnumerationOptions& opts = {});

/// Distinct directions spanned by the lifted sample.
std::size_t few_directions_experiment(const CurveSpec& curve, const std::vector<Rational>& xs,
                                      const EnumerationOptions& opts = {});

}  // namespace orchard
