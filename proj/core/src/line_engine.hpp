#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "orchard/projective.hpp"

namespace orchard::detail {

struct LineGroup {
  ProjLine line;
  std::uint32_t multiplicity;
  std::vector<std::uint32_t> points;  // sorted; empty unless requested
};

/// Every line spanned by `pts` carrying at least `min_multiplicity` of them
/// (min_multiplicity >= 2), sorted by canonical line. Each anchor point groups
/// the other points by joining line; a line is emitted by its lowest-index
/// point, so no global map is needed and the output does not depend on
/// `workers`.
std::vector<LineGroup> enumerate_lines(std::span<const ProjPoint> pts,
                                       std::size_t min_multiplicity, bool keep_points,
                                       unsigned workers, bool force_bignum = false);

/// True when all coordinates fit the exact 128-bit fast path.
bool fits_fast_path(std::span<const ProjPoint> pts);

unsigned resolve_workers(unsigned requested);

}  // namespace orchard::detail
