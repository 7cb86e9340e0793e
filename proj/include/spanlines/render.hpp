#pragma once

#include <stdexcept>
#include <string>

#include "spanlines/projective.hpp"

namespace spanlines {

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// SVG drawing of a real configuration and its spanned lines.
///
/// Points are placed in the first affine chart (a x + b y + c z != 0 for
/// every point, small integer (a, b, c) tried in a fixed order) and only then
/// converted to floating point.  Lines are clipped to the bounding box of
/// the points plus a 10% margin.  Throws RenderError for configurations with
/// non-real coordinates.
std::string render_svg(const Configuration& config, const LineMap& lines);

}  // namespace spanlines
