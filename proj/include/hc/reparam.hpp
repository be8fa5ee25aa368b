#pragma once

// Optimal affine reparametrization t -> a*t + b of a parametrization over
// Q(a): the smallest coefficient field reachable by an affine change.

#include <optional>
#include <string>
#include <vector>

#include "hc/hypercircle.hpp"

namespace hc {

struct AffineShift {
    FieldElement a, b;  // in the alpha field, a != 0
};

struct ReparamOptions {
    GroebnerOptions groebner;
    unsigned primitive_cap = 64;
};

enum class ReparamStatus { Success, Fail };

/// How the shift was obtained.
enum class ReparamPath {
    RationalInput,  // coefficients already rational: identity
    Zero,           // witness variety has no points at infinity: FAIL
    Full,           // r = n: identity
    Rational,       // r = 1: the witness line over Q
    Tower,          // 1 < r < n: second descent over Q(g)
};

struct LineParam {
    std::vector<FieldElement> point;      // p
    std::vector<FieldElement> direction;  // v; the line is p + t*v
};

struct ReparamReport {
    ReparamStatus status = ReparamStatus::Fail;
    ReparamPath path = ReparamPath::Zero;
    unsigned r = 0;
    std::optional<SubfieldEmbedding> gamma;
    std::optional<AffineShift> shift;
    /// phi(a*t + b), reduced with monic denominators, coefficients in Q(g)
    /// written over gamma_field (or Q).
    std::vector<RatFunc> reparametrized;

    Ideal witness;
    int witness_dimension = -1;
    std::vector<ProjectivePoint> infinity_points;
    std::optional<UPoly> relative_minpoly;  // over gamma_field
    std::optional<Tower> tower;
    Ideal second_witness;
    std::vector<MPoly> line_forms;  // linear part of the witness the line came from
    std::optional<LineParam> line;
};

ReparamReport optimal_affine_reparametrize(const Parametrization& phi, const FieldPtr& alpha_field,
                                           const ReparamOptions& options = {});

/// phi(a*t + b) with each component reduced, denominators monic.
std::vector<RatFunc> compose_shift(const Parametrization& phi, const AffineShift& shift);

/// Every normalized coefficient of phi(a*t + b) lies in the subfield.
bool verify_reparametrization(const Parametrization& phi, const AffineShift& shift, const SubfieldEmbedding& emb);

/// [Q(coefficients) : Q] for components normalized to monic denominators.
unsigned coefficient_field_degree(const std::vector<RatFunc>& comps, const FieldPtr& alpha_field, unsigned cap = 64);

/// The line of a one-dimensional witness ideal over `base`: from its linear
/// part when that cuts a line, else from the direction at infinity plus a
/// base point on the coordinate hyperplane through the origin.
LineParam extract_line(const Ideal& witness, const std::vector<ProjectivePoint>& infinity, const FieldPtr& base,
                       const GroebnerOptions& options, std::vector<MPoly>* forms = nullptr);

}  // namespace hc
