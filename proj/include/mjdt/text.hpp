#pragma once

#include <string>
#include <string_view>

#include "mjdt/jdt.hpp"

namespace mjdt {

// Parses `OUTER[/INNER][:shifted]`, e.g. "6,5,4,2/5,3:shifted" or "3,3,2".
Shape parse_shape_spec(std::string_view text);

// Grid format: one line per row of the bounding grid, entries separated by
// spaces, '.' for positions outside the shape. Trailing '.' tokens may be
// omitted on input. Blank lines and lines starting with '#' are ignored.
Filling parse_filling(std::string_view text, const Shape& shape);

// Always emits the full bounding-grid width, one '\n'-terminated line per row.
std::string render_filling(const Filling& f);

// Two grids separated by a line holding "--".
std::string render_pair(const PairedState& state);

}  // namespace mjdt
