#pragma once

#include <iosfwd>
#include <string>

#include "orchard/errors.hpp"
#include "orchard/projective.hpp"
#include "orchard/rich_lines.hpp"

namespace orchard {

/// Malformed points document.
class FormatError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Parses "p/q" or "p" exactly. Throws FormatError.
Rational parse_rational(const std::string& text);
/// Reduced "p/q" with q > 0; integers still carry "/1".
std::string format_rational(const Rational& r);

/// JSON: {"points": [{"x": "p/q", "y": "p/q"} | {"h": ["a", "b", "c"]}, ...],
///        "labels": [1, 2, 3, ...]}   (labels optional)
PointSet read_points(std::istream& in);
PointSet read_points_file(const std::string& path);
void write_points(std::ostream& out, const PointSet& set);
void write_points_file(const std::string& path, const PointSet& set);

}  // namespace orchard
