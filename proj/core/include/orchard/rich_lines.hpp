#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "orchard/projective.hpp"

namespace orchard {

/// Ordered set of distinct projective points with optional group labels in
/// {1, 2, 3}. Duplicate points are rejected at construction.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<ProjPoint> points);
  PointSet(std::vector<ProjPoint> points, std::vector<int> labels);

  std::size_t size() const { return points_.size(); }
  const std::vector<ProjPoint>& points() const { return points_; }
  const ProjPoint& operator[](std::size_t i) const { return points_[i]; }

  bool has_labels() const { return labels_.has_value(); }
  const std::vector<int>& labels() const;
  /// Points carrying label g, in set order.
  std::vector<ProjPoint> group(int g) const;

 private:
  std::vector<ProjPoint> points_;
  std::optional<std::vector<int>> labels_;
};

struct RichLine {
  ProjLine line;
  std::size_t multiplicity;
};

/// Every line spanned by a point set with its exact incidence count,
/// sorted by canonical line triple.
struct RichLineTable {
  std::size_t n_points = 0;
  std::vector<RichLine> entries;
};

/// A line together with the (sorted) indices of the set points on it.
struct LineIncidence {
  ProjLine line;
  std::vector<std::uint32_t> points;
};

struct EnumerationOptions {
  unsigned workers = 0;  // 0 = one per hardware thread
  bool force_bignum = false;
};

RichLineTable spanned_lines(const PointSet& h, const EnumerationOptions& opts = {});

/// Lines with at least `min_multiplicity` points, with their incident points.
std::vector<LineIncidence> rich_incidences(const PointSet& h, std::size_t min_multiplicity,
                                           const EnumerationOptions& opts = {});

enum class RichMode { at_least, exactly };

std::size_t k_rich_count(const RichLineTable& t, std::size_t k, RichMode mode);

/// |T(H)|: lines through at least three points.
inline std::size_t triple_line_count(const RichLineTable& t) {
  return k_rich_count(t, 3, RichMode::at_least);
}

/// Sum over lines of C(m, 2); equals C(n, 2) for a set of distinct points.
std::uint64_t pair_total(const RichLineTable& t);

/// Multiset of three group labels, e.g. {1, 2, 3} or {1, 1, 2}.
using Pattern = std::array<int, 3>;
/// Accepts "123", "1,1,2", "{1,1,2}".
Pattern parse_pattern(std::string_view text);

/// Number of distinct lines containing three distinct points whose labels
/// realize `pattern`.
std::size_t tripartite_count(const PointSet& h, const Pattern& pattern,
                             const EnumerationOptions& opts = {});

/// Number of distinct directions (points at infinity) of connecting lines.
std::size_t direction_count(const PointSet& h, const EnumerationOptions& opts = {});

/// floor(n(n-3)/6) + 1, the maximal number of 3-rich lines for large n.
std::int64_t green_tao_bound(std::int64_t n);

}  // namespace orchard
