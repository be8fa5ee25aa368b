#pragma once

// Dense univariate polynomials over any field level.

#include <utility>
#include <vector>

#include "hc/field.hpp"

namespace hc {

class UPoly {
   public:
    UPoly() = default;
    /// Coefficients lowest degree first; trailing zeros are trimmed.
    explicit UPoly(std::vector<FieldElement> coeffs);
    UPoly(std::initializer_list<FieldElement> coeffs) : UPoly(std::vector<FieldElement>(coeffs)) {}

    static UPoly constant(const FieldElement& c);
    static UPoly monomial(const FieldElement& c, unsigned k);
    static UPoly x() { return monomial(FieldElement(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    FieldElement coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : FieldElement(); }
    const FieldElement& leading() const { return coeffs_.back(); }
    FieldPtr field() const { return common_field(coeffs_); }

    FieldElement eval(const FieldElement& x) const;
    UPoly compose(const UPoly& inner) const;
    UPoly monic() const;
    UPoly derivative() const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const FieldElement& c, const UPoly& p);
    friend bool operator==(const UPoly& a, const UPoly& b);

   private:
    void trim();
    std::vector<FieldElement> coeffs_;
};

/// f = q*g + r with deg r < deg g. Throws on g = 0.
std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g);

/// Monic gcd; gcd(0, 0) throws.
UPoly gcd(const UPoly& f, const UPoly& g);

struct ExtGcd {
    UPoly d;  // monic
    UPoly s;
    UPoly t;  // s*f + t*g = d
};
ExtGcd ext_gcd(const UPoly& f, const UPoly& g);

/// Sylvester resultant; throws on a zero argument.
FieldElement resultant(const UPoly& f, const UPoly& g);

}  // namespace hc
