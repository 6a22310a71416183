#include "orchard/rich_lines.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_set>

#include "line_engine.hpp"

namespace orchard {

PointSet::PointSet(std::vector<ProjPoint> points) : points_(std::move(points)) {
  std::unordered_set<ProjPoint, HomogeneousHash> seen;
  seen.reserve(points_.size());
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw GeometryError("duplicate point " + to_string(p));
  }
}

PointSet::PointSet(std::vector<ProjPoint> points, std::vector<int> labels)
    : PointSet(std::move(points)) {
  if (labels.size() != points_.size()) {
    throw GeometryError("label count does not match point count");
  }
  for (int l : labels) {
    if (l < 1 || l > 3) throw GeometryError("labels must be in {1,2,3}");
  }
  labels_ = std::move(labels);
}

const std::vector<int>& PointSet::labels() const {
  if (!labels_) throw GeometryError("point set has no labels");
  return *labels_;
}

std::vector<ProjPoint> PointSet::group(int g) const {
  const auto& ls = labels();
  std::vector<ProjPoint> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (ls[i] == g) out.push_back(points_[i]);
  }
  return out;
}

RichLineTable spanned_lines(const PointSet& h, const EnumerationOptions& opts) {
  RichLineTable t;
  t.n_points = h.size();
  auto groups = detail::enumerate_lines(h.points(), 2, false, opts.workers, opts.force_bignum);
  t.entries.reserve(groups.size());
  for (auto& g : groups) t.entries.push_back({std::move(g.line), g.multiplicity});
  return t;
}

std::vector<LineIncidence> rich_incidences(const PointSet& h, std::size_t min_multiplicity,
                                           const EnumerationOptions& opts) {
  auto groups =
      detail::enumerate_lines(h.points(), min_multiplicity, true, opts.workers, opts.force_bignum);
  std::vector<LineIncidence> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.push_back({std::move(g.line), std::move(g.points)});
  return out;
}

std::size_t k_rich_count(const RichLineTable& t, std::size_t k, RichMode mode) {
  if (k < 2) throw GeometryError("k must be at least 2");
  return static_cast<std::size_t>(std::count_if(t.entries.begin(), t.entries.end(), [&](const RichLine& e) {
    return mode == RichMode::exactly ? e.multiplicity == k : e.multiplicity >= k;
  }));
}

std::uint64_t pair_total(const RichLineTable& t) {
  std::uint64_t s = 0;
  for (const auto& e : t.entries) s += static_cast<std::uint64_t>(e.multiplicity) * (e.multiplicity - 1) / 2;
  return s;
}

Pattern parse_pattern(std::string_view text) {
  std::vector<int> digits;
  for (char c : text) {
    if (c >= '1' && c <= '3') {
      digits.push_back(c - '0');
    } else if (c == ',' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) {
      continue;
    } else {
      throw GeometryError("bad pattern '" + std::string(text) + "'");
    }
  }
  if (digits.size() != 3) throw GeometryError("pattern must name exactly three groups");
  Pattern p{digits[0], digits[1], digits[2]};
  std::sort(p.begin(), p.end());
  return p;
}

std::size_t tripartite_count(const PointSet& h, const Pattern& pattern,
                             const EnumerationOptions& opts) {
  const auto& labels = h.labels();
  std::array<std::size_t, 4> need{};
  for (int g : pattern) {
    if (g < 1 || g > 3) throw GeometryError("pattern groups must be in {1,2,3}");
    ++need[g];
  }
  for (int g = 1; g <= 3; ++g) {
    if (need[g] > 0 && std::find(labels.begin(), labels.end(), g) == labels.end()) {
      throw GeometryError("pattern references missing group " + std::to_string(g));
    }
  }
  std::size_t count = 0;
  for (const auto& inc : rich_incidences(h, 3, opts)) {
    std::array<std::size_t, 4> have{};
    for (auto idx : inc.points) ++have[labels[idx]];
    if (have[1] >= need[1] && have[2] >= need[2] && have[3] >= need[3]) ++count;
  }
  return count;
}

std::size_t direction_count(const PointSet& h, const EnumerationOptions& opts) {
  for (const auto& p : h.points()) {
    if (at_infinity(p)) throw GeometryError("direction count needs affine points; got " + to_string(p));
  }
  std::vector<ProjPoint> dirs;
  for (const auto& e : spanned_lines(h, opts).entries) dirs.push_back(direction_of(e.line));
  std::sort(dirs.begin(), dirs.end());
  return static_cast<std::size_t>(std::unique(dirs.begin(), dirs.end()) - dirs.begin());
}

std::int64_t green_tao_bound(std::int64_t n) {
  if (n < 3) throw GeometryError("Green-Tao bound needs n >= 3");
  return n * (n - 3) / 6 + 1;
}

}  // namespace orchard
