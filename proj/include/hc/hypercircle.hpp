#pragma once

// Hypercircles of units (at+b)/(ct+d) and points at infinity of witness ideals.

#include <vector>

#include "hc/descent.hpp"
#include "hc/tower.hpp"

namespace hc {

struct LinearFraction {
    FieldElement a, b, c, d;
};

/// psi_0..psi_{n-1} over the base of `top` with sum a^i psi_i = u, each reduced.
std::vector<RatFunc> unit_to_hypercircle(const LinearFraction& u, const FieldPtr& top);

struct ProjectivePoint {
    std::vector<FieldElement> coords;

    /// Scales the last nonzero coordinate to 1.
    ProjectivePoint canonical() const;
    friend bool operator==(const ProjectivePoint& p, const ProjectivePoint& q);
};

/// [l_0 : ... : l_{n-1} : 0] from M(t)/(t - a) = sum l_i t^i.
ProjectivePoint primitive_infinity_point(const FieldPtr& top);

/// Points at infinity of V(ideal) (ideal over the base of `top`, in n vars)
/// with all coordinates in `top`, canonical and sorted by canonical_compare.
/// Empty for the unit ideal and for zero-dimensional ideals.
std::vector<ProjectivePoint> points_at_infinity(const Ideal& ideal, const FieldPtr& top,
                                                const GroebnerOptions& options = {});

/// Subfield generated by the affine coordinates of the first point.
SubfieldEmbedding hypercircle_degree_field(const std::vector<ProjectivePoint>& points, const FieldPtr& alpha_field,
                                           unsigned cap = 64);

}  // namespace hc
