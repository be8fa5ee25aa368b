#pragma once

// Algebraic number fields as towers over Q, and their elements.
//
// A NumberField is Q, or base(x)/(m(x)) for a monic irreducible m over the
// base level. Elements of level k are coefficient vectors over level k-1 in the
// power basis 1, g, ..., g^(n-1) of the level's generator g. A FieldElement
// with a null field is a rational constant; it lifts into any field on demand,
// so rational constants may be mixed freely with elements of any level.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hc/arith.hpp"

namespace hc {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    FieldElement(const Rational& q) : q_(q) {}  // NOLINT(google-explicit-constructor)
    /// Element of `field` with the given coordinates over field->base(); reduced.
    FieldElement(FieldPtr field, std::vector<FieldElement> coords);

    static FieldElement generator(const FieldPtr& field);

    const FieldPtr& field() const noexcept { return field_; }
    bool is_rational_constant() const noexcept { return field_ == nullptr; }
    const Rational& rational() const noexcept { return q_; }
    const std::vector<FieldElement>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    /// Throws input_error("division by zero") on zero.
    FieldElement inverse() const;
    FieldElement pow(unsigned k) const;

   private:
    FieldPtr field_;
    Rational q_;
    std::vector<FieldElement> coords_;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
   public:
    /// No irreducibility check; see make_extension in tower.hpp for the validated path.
    /// `minpoly` is monic, lowest degree first, with coefficients in `base`.
    static FieldPtr make(FieldPtr base, std::vector<FieldElement> minpoly, std::string name);

    const FieldPtr& base() const noexcept { return base_; }
    unsigned degree() const noexcept { return static_cast<unsigned>(minpoly_.size() - 1); }
    const std::vector<FieldElement>& minpoly() const noexcept { return minpoly_; }
    const std::string& name() const noexcept { return name_; }
    /// 1 for a simple extension of Q, 2 for a tower over a simple extension.
    unsigned level() const noexcept { return level_; }

    NumberField(FieldPtr base, std::vector<FieldElement> minpoly, std::string name);

   private:
    FieldPtr base_;
    std::vector<FieldElement> minpoly_;
    std::string name_;
    unsigned level_;
};

/// [F : Q]; 1 for the null field.
unsigned absolute_degree(const FieldPtr& field);
/// True when `sub` is `field` or one of its base levels (null is Q).
bool is_subfield_level(const FieldPtr& sub, const FieldPtr& field);
/// The larger of two fields on a common tower; throws on unrelated fields.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);
FieldPtr common_field(std::span<const FieldElement> elems);

/// Re-expresses x as an element of `target` (which must contain x's field).
FieldElement lift(const FieldElement& x, const FieldPtr& target);
/// Drops as many tower levels as possible; rational elements become constants.
FieldElement lower(const FieldElement& x);
/// Lowers x into exactly `target` when x lies in that level; throws otherwise.
FieldElement lower_to(const FieldElement& x, const FieldPtr& target);
bool lies_in(const FieldElement& x, const FieldPtr& level);

/// Coordinates of x over Q in the flattened power basis of `field`;
/// index k*[base:Q] + j stands for (basis_j of base) * g^k.
std::vector<Rational> flatten(const FieldElement& x, const FieldPtr& field);
FieldElement unflatten(std::span<const Rational> coords, const FieldPtr& field);
/// The Q-basis matching flatten's coordinate order.
std::vector<FieldElement> q_basis(const FieldPtr& field);

/// Lexicographic order on the flattened rational coordinate vector.
int canonical_compare(const FieldElement& a, const FieldElement& b);

}  // namespace hc
