#include "hc/ratfunc.hpp"

#include "hc/error.hpp"

namespace hc {

RatFunc::RatFunc(UPoly num, UPoly den) {
    if (den.is_zero()) throw input_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = UPoly::constant(1);
        return;
    }
    UPoly g = gcd(num, den);
    num = divrem(num, g).first;
    den = divrem(den, g).first;
    FieldElement inv = den.leading().inverse();
    num_ = inv * num;
    den_ = inv * den;
}

RatFunc RatFunc::compose(const UPoly& inner) const {
    UPoly den = den_.compose(inner);
    if (den.is_zero()) throw input_error("substitution pole");
    return RatFunc(num_.compose(inner), std::move(den));
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
    // homogenized evaluation: p(a/b) = P(a, b) / b^deg
    const int d = std::max(num_.degree(), den_.degree());
    auto homog = [&](const UPoly& p) {
        UPoly acc;
        for (int k = 0; k <= p.degree(); ++k) {
            UPoly term = UPoly::constant(p.coeffs()[k]);
            for (int i = 0; i < k; ++i) term = term * inner.num();
            for (int i = k; i < d; ++i) term = term * inner.den();
            acc += term;
        }
        return acc;
    };
    UPoly den = homog(den_);
    if (den.is_zero()) throw input_error("substitution pole");
    return RatFunc(homog(num_), std::move(den));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw input_error("division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace hc
