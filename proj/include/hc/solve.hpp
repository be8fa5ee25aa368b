#pragma once

// Points of zero-dimensional systems by lex triangularization.

#include <vector>

#include "hc/groebner.hpp"

namespace hc {

/// Every point of V(ideal) whose coordinates lie in `field` (null = Q). The
/// generators may have coefficients in any subfield of `field`. Throws
/// input_error("system is not zero-dimensional") when a variable stays free.
/// Points are sorted lexicographically by canonical_compare on coordinates.
std::vector<std::vector<FieldElement>> solutions_in_field(const Ideal& ideal, const FieldPtr& field,
                                                          const GroebnerOptions& options = {});

}  // namespace hc
