#pragma once

#include <string>

#include "orchard/rich_lines.hpp"

namespace orchard {

struct SvgOptions {
  bool mark_triple_lines = false;
  int size = 640;  // square canvas, in pixels
};

/// Deterministic SVG drawing: a circle per finite point, an arrow on the frame
/// per point at infinity, and one <path class="triple-line"> per line through
/// at least three points when requested. The line at infinity is drawn along
/// the frame.
std::string render_svg(const PointSet& set, const SvgOptions& opts = {});

}  // namespace orchard
