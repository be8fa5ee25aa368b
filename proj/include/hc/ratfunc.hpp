#pragma once

#include "hc/mpoly.hpp"
#include "hc/upoly.hpp"

namespace hc {

/// Univariate rational function kept reduced: gcd(num, den) = 1, den monic.
class RatFunc {
   public:
    RatFunc() : num_(), den_(UPoly::constant(1)) {}
    RatFunc(UPoly num, UPoly den);  // NOLINT(google-explicit-constructor)
    explicit RatFunc(UPoly poly) : RatFunc(std::move(poly), UPoly::constant(1)) {}

    const UPoly& num() const noexcept { return num_; }
    const UPoly& den() const noexcept { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// f(inner) for a polynomial inner argument.
    RatFunc compose(const UPoly& inner) const;
    /// f(inner) for a rational inner argument.
    RatFunc compose(const RatFunc& inner) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

   private:
    UPoly num_, den_;
};

/// Multivariate fraction; not reduced (no multivariate gcd is available).
struct MRatFunc {
    MPoly num;
    MPoly den;
};

}  // namespace hc
