#pragma once
// Brute-force reference implementations. They deliberately avoid the library's
// line engine, canonical forms and join/meet: everything is recomputed from
// raw coordinates with plain GMP integers.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "orchard/rich_lines.hpp"

namespace oracle {

using Triple = std::array<mpz_class, 3>;

inline Triple raw(const orchard::ProjPoint& p) { return {p[0], p[1], p[2]}; }

inline std::vector<Triple> raw_all(const orchard::PointSet& h) {
  std::vector<Triple> out;
  for (const auto& p : h.points()) out.push_back(raw(p));
  return out;
}

inline mpz_class det(const Triple& a, const Triple& b, const Triple& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline bool collinear(const Triple& a, const Triple& b, const Triple& c) {
  return sgn(det(a, b, c)) == 0;
}

/// Lines of a point set, each given as the sorted indices of its points.
/// A line is reported from its two smallest indices.
inline std::vector<std::vector<std::size_t>> lines(const std::vector<Triple>& pts) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool first = true;
      for (std::size_t l = 0; l < j && first; ++l) {
        if (l != i && collinear(pts[i], pts[j], pts[l])) first = false;
      }
      if (!first) continue;
      std::vector<std::size_t> on{i, j};
      for (std::size_t l = j + 1; l < n; ++l) {
        if (collinear(pts[i], pts[j], pts[l])) on.push_back(l);
      }
      out.push_back(std::move(on));
    }
  }
  return out;
}

/// |T(H)|: lines with at least k points (or exactly k).
inline std::size_t rich_count(const std::vector<Triple>& pts, std::size_t k, bool exactly = false) {
  std::size_t c = 0;
  for (const auto& l : lines(pts)) {
    if (exactly ? l.size() == k : l.size() >= k) ++c;
  }
  return c;
}

/// Counts lines through three pairwise distinct points whose labels form the
/// multiset `pattern`, by trying every triple on the line.
inline std::size_t tripartite(const std::vector<Triple>& pts, const std::vector<int>& labels,
                              std::array<int, 3> pattern) {
  std::sort(pattern.begin(), pattern.end());
  std::size_t c = 0;
  for (const auto& l : lines(pts)) {
    bool hit = false;
    for (std::size_t a = 0; a < l.size() && !hit; ++a)
      for (std::size_t b = a + 1; b < l.size() && !hit; ++b)
        for (std::size_t d = b + 1; d < l.size() && !hit; ++d) {
          std::array<int, 3> got{labels[l[a]], labels[l[b]], labels[l[d]]};
          std::sort(got.begin(), got.end());
          hit = got == pattern;
        }
    if (hit) ++c;
  }
  return c;
}

/// Number of C(N,3) triples that are collinear.
inline std::uint64_t collinear_triples(const std::vector<Triple>& pts) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) c += collinear(pts[i], pts[j], pts[k]);
  return c;
}

/// Distinct directions of connecting lines of finite points, as reduced
/// slopes (vertical lines map to a sentinel).
inline std::size_t directions(const std::vector<Triple>& pts) {
  std::set<std::pair<bool, mpq_class>> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      mpq_class xi(pts[i][0], pts[i][2]), yi(pts[i][1], pts[i][2]);
      mpq_class xj(pts[j][0], pts[j][2]), yj(pts[j][1], pts[j][2]);
      for (mpq_class* q : {&xi, &yi, &xj, &yj}) q->canonicalize();
      const mpq_class dx = xj - xi, dy = yj - yi;
      if (sgn(dx) == 0) {
        seen.emplace(true, mpq_class(0));
      } else {
        seen.emplace(false, dy / dx);
      }
    }
  }
  return seen.size();
}

}  // namespace oracle
