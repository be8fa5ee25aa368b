#pragma once

// Validated extensions, minimal polynomials, subfields of Q(a) and the
// relative tower Q(g)(a), and root finding by restriction of scalars.

#include <optional>
#include <string>
#include <vector>

#include "hc/field.hpp"
#include "hc/mpoly.hpp"
#include "hc/upoly.hpp"

namespace hc {

/// NumberField::make plus an irreducibility check over the base level.
/// Throws input_error("not irreducible: factor ...") with a witness factor.
FieldPtr make_extension(FieldPtr base, std::vector<FieldElement> minpoly, std::string name);

/// A monic factor of f of degree 1..deg/2 over `base`, if f is reducible there.
std::optional<UPoly> find_factor(const UPoly& f, const FieldPtr& base);

/// Rational roots of a nonzero polynomial with rational coefficients, ascending.
std::vector<Rational> rational_roots(const UPoly& f);

/// Monic minimal polynomial over Q.
UPoly min_poly_over_Q(const FieldElement& x);

struct SubfieldEmbedding {
    FieldPtr alpha_field;
    UPoly gamma_minpoly;  // over Q; x when the subfield is Q
    FieldElement gamma_in_alpha;
    FieldPtr gamma_field;  // Q(g), null when r = 1

    unsigned degree() const { return static_cast<unsigned>(gamma_minpoly.degree()); }
    /// The image of an element of gamma_field in alpha_field.
    FieldElement embed(const FieldElement& y) const;
};

/// The subfield Q(gamma) of alpha_field; builds gamma_field named `name`.
SubfieldEmbedding make_embedding(const FieldPtr& alpha_field, const FieldElement& gamma, const std::string& name = "g");

/// Coordinates of x in the basis 1, g, ..., g^(r-1), when x lies in Q(g).
std::optional<std::vector<Rational>> membership(const FieldElement& x, const SubfieldEmbedding& emb);
/// The same, as an element of gamma_field.
std::optional<FieldElement> to_subfield(const FieldElement& x, const SubfieldEmbedding& emb);

/// Primitive element of Q(gens) inside `field`: each generator in order, then
/// g_i + l*g_j for l = 1..cap, then a running sum. Rescaled by a rational
/// so that its minimal polynomial is integral with the smallest coefficients.
SubfieldEmbedding primitive_element(const std::vector<FieldElement>& gens, const FieldPtr& field,
                                    unsigned cap = 64, const std::string& name = "g");

/// Monic minimal polynomial of the generator of alpha_field over Q(g).
UPoly relative_min_poly(const SubfieldEmbedding& emb);

/// Q(g)(a) as a two-level field isomorphic to alpha_field.
struct Tower {
    SubfieldEmbedding emb;
    FieldPtr field;

    FieldElement to_tower(const FieldElement& x) const;
    FieldElement from_tower(const FieldElement& y) const;
};

/// Requires 1 < r < n.
Tower make_tower(const SubfieldEmbedding& emb, const std::string& alpha_name);

/// Writes a polynomial over `field` in variables that range over Q as its
/// [field:Q] rational coordinate polynomials.
std::vector<MPoly> restrict_scalars(const MPoly& f, const FieldPtr& field);

/// All roots of f lying in `field`, sorted by canonical_compare.
std::vector<FieldElement> roots_in_field(const UPoly& f, const FieldPtr& field);

}  // namespace hc
