#pragma once

#include <optional>
#include <string>

#include "latmin/currents.hpp"
#include "latmin/pattern.hpp"

namespace latmin {

/// Window contents as text rows, '#' = in, '.' = out, top row first.
std::string render_ascii(const Pattern& a, const Window& w);

/// SVG of the geometric realization: unit squares shaded, induced edges
/// drawn, boundary edges bold, and current arrows when a current is given.
std::string render_svg(const Pattern& a, const Window& w,
                       const std::optional<Current>& current = std::nullopt);

}  // namespace latmin
