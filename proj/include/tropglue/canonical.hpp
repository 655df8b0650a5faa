#pragma once

#include <string>

#include "tropglue/lattice.hpp"
#include "tropglue/tropical.hpp"

namespace tropglue {

// Certificate that is equal for two types iff they are isomorphic, preserving end
// labels, faces, base degrees and derivatives (edges may be stored reversed with
// negated derivative).
std::string canonical_form(const CombinatorialType& type);

}  // namespace tropglue
