#pragma once

#include <string>

#include "tropglue/glue.hpp"

namespace tropglue {

// Deterministic SVG of a realized curve: the triangle outline (edge = 400 units)
// or plane axes, edges as segments, vertices as dots, corner point counts and end
// labels as text. Throws Error(NotRigid) if the curve has no realization.
std::string render_svg(const GluingConfig& config);

}  // namespace tropglue
