#include <doctest.h>

#include "hc/error.hpp"
#include "hc/mpoly.hpp"
#include "hc/ratfunc.hpp"
#include "hc/upoly.hpp"
#include "support.hpp"

using namespace hc;
using namespace hc::testing;

TEST_CASE("field arithmetic in the quartic field") {
    FieldPtr f = quartic_field();
    FieldElement a = FieldElement::generator(f);
    // a^4 = 4a^3 - 12a^2 + 16a - 8
    CHECK(a.pow(4) == FieldElement(4) * a.pow(3) - FieldElement(12) * a.pow(2) + FieldElement(16) * a - FieldElement(8));
    CHECK((a * a.inverse()).is_one());
    CHECK_THROWS_AS(FieldElement(0).inverse(), Error);

    // gamma = -4a + 3/2 a^2 - 1/2 a^3 satisfies x^2 + 6x + 10
    FieldElement g = FieldElement(-4) * a + FieldElement(q(3, 2)) * a.pow(2) - FieldElement(q(1, 2)) * a.pow(3);
    CHECK((g * g + FieldElement(6) * g + FieldElement(10)).is_zero());
}

TEST_CASE("field tower flatten round trip") {
    FieldPtr base = gamma_field();
    FieldElement g = FieldElement::generator(base);
    // a^2 + (-8 - 2g) a + (8 + 2g) over Q(g)
    FieldPtr top = NumberField::make(base, {FieldElement(8) + FieldElement(2) * g, FieldElement(-8) - FieldElement(2) * g, 1}, "a");
    CHECK(absolute_degree(top) == 4);
    CHECK(top->level() == 2);
    Random rnd(7);
    for (int i = 0; i < 30; ++i) {
        FieldElement x = rnd.element(top);
        auto v = flatten(x, top);
        CHECK(v.size() == 4);
        CHECK(unflatten(v, top) == x);
    }
    FieldElement a = FieldElement::generator(top);
    CHECK(lies_in(g, base));
    CHECK(!lies_in(a, base));
    CHECK(lower(lift(FieldElement(3), top)).is_rational_constant());
}

TEST_CASE("univariate division and gcd") {
    FieldPtr f = quartic_field();
    FieldElement a = FieldElement::generator(f);
    UPoly quartic{8, -16, 12, -4, 1};
    UPoly lin{-a, 1};
    auto [qq, r] = divrem(quartic, lin);
    CHECK(r.is_zero());
    CHECK(qq * lin == quartic);

    auto [q1, r1] = divrem(quartic, UPoly{1});
    CHECK(q1 == quartic);
    CHECK(r1.is_zero());

    FieldElement g = FieldElement::generator(gamma_field());
    auto [q2, r2] = divrem(UPoly{10, 6, 1}, UPoly{-g, 1});
    CHECK(q2 == UPoly{FieldElement(6) + g, 1});
    CHECK(r2.is_zero());

    CHECK_THROWS_AS(divrem(quartic, UPoly{}), Error);
    CHECK(gcd(quartic, UPoly{}) == quartic);
    CHECK_THROWS_AS(gcd(UPoly{}, UPoly{}), Error);

    ExtGcd e = ext_gcd(UPoly{0, 1}, UPoly{1, 0, 1});
    CHECK(e.d == UPoly{1});
    CHECK(e.s == UPoly{0, -1});
    CHECK(e.t == UPoly{1});
}

TEST_CASE("univariate resultants") {
    CHECK(resultant(UPoly{1, 0, 1}, UPoly{-2, 1}) == FieldElement(5));
    CHECK(resultant(UPoly{-2, 1}, UPoly{1, 0, 1}) == FieldElement(5));
    CHECK(resultant(UPoly{3}, UPoly{1, 0, 1}) == FieldElement(9));
    // x^2 - 1 and x - 1 share a root
    CHECK(resultant(UPoly{-1, 0, 1}, UPoly{-1, 1}).is_zero());
    CHECK_THROWS_AS(resultant(UPoly{}, UPoly{1, 1}), Error);
}

TEST_CASE("univariate properties") {
    Random rnd(11);
    FieldPtr f = gaussian_field();
    for (int i = 0; i < 60; ++i) {
        UPoly a = rnd.upoly(f, 4), b = rnd.upoly(f, 4), c = rnd.upoly(f, 3);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) {
            auto [qq, r] = divrem(a, b);
            CHECK(qq * b + r == a);
            CHECK(r.degree() < b.degree());
        }
        if (!a.is_zero() || !b.is_zero()) {
            ExtGcd e = ext_gcd(a, b);
            CHECK(e.s * a + e.t * b == e.d);
            CHECK(e.d == gcd(a, b));
        }
        if (a.degree() >= 1 && b.degree() >= 1) {
            FieldElement r = resultant(a, b);
            CHECK(r.is_zero() == (gcd(a, b).degree() > 0));
            FieldElement sign = ((a.degree() * b.degree()) % 2) ? FieldElement(-1) : FieldElement(1);
            CHECK(resultant(b, a) == sign * r);
        }
        FieldElement x = rnd.element(f);
        CHECK(a.compose(b).eval(x) == a.eval(b.eval(x)));
    }
}

TEST_CASE("multivariate resultant and exact division") {
    FieldPtr f = gaussian_field();
    FieldElement i = FieldElement::generator(f);
    MPoly t0 = MPoly::variable(2, 0), t1 = MPoly::variable(2, 1);
    MPoly one = MPoly::constant(2, 1);
    // Res_x(x^2 + 1, t0 + x t1) = t0^2 + t1^2
    MPoly r = resultant({one, MPoly(2), one}, {t0, t1});
    CHECK(r == t0 * t0 + t1 * t1);
    CHECK(exact_divide(r, t0 + i * t1) == t0 - i * t1);
    CHECK_THROWS_AS(exact_divide(r, t0 + t1), Error);
}

TEST_CASE("substitution and homogenization") {
    FieldPtr f = gaussian_field();
    FieldElement i = FieldElement::generator(f);
    MPoly t = MPoly::variable(1, 0);
    MPoly t0 = MPoly::variable(2, 0), t1 = MPoly::variable(2, 1);
    MPoly s = substitute(t * t, {t0 + i * t1});
    CHECK(s == t0 * t0 + FieldElement(2) * i * t0 * t1 - t1 * t1);

    MPoly p = t0 * t0 + t1 + MPoly::constant(2, 3);
    MPoly h = homogenize(p);
    CHECK(h.arity() == 3);
    MPoly z = MPoly::variable(3, 2);
    MPoly x0 = MPoly::variable(3, 0), x1 = MPoly::variable(3, 1);
    CHECK(h == x0 * x0 + x1 * z + FieldElement(3) * z * z);
    CHECK(dehomogenize(h, 2) == p);
    CHECK(leading_form(p) == t0 * t0);
    CHECK(substitute_value(p, 0, 2) == t1 + MPoly::constant(2, 7));
    CHECK(to_upoly(from_upoly(UPoly{1, 2, 3})) == UPoly{1, 2, 3});
}

TEST_CASE("multivariate properties") {
    Random rnd(23);
    FieldPtr f = quartic_field();
    for (int i = 0; i < 40; ++i) {
        MPoly a = rnd.mpoly(f, 3, 3, 4), b = rnd.mpoly(f, 3, 3, 4), c = rnd.mpoly(f, 3, 2, 3);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
        std::vector<MPoly> images{rnd.mpoly(f, 2, 2, 3), rnd.mpoly(f, 2, 2, 3), rnd.mpoly(f, 2, 2, 3)};
        CHECK(substitute(a * b, images) == substitute(a, images) * substitute(b, images));
        CHECK(substitute(a + b, images) == substitute(a, images) + substitute(b, images));
        if (!a.is_zero()) CHECK(dehomogenize(homogenize(a), 3) == a);
    }
}

TEST_CASE("rational functions") {
    RatFunc r(UPoly{-1, 0, 1}, UPoly{-2, 2});  // (x^2 - 1) / (2x - 2) = (x + 1) / 2
    CHECK(r.num() == UPoly{q(1, 2), q(1, 2)});
    CHECK(r.den() == UPoly{1});
    RatFunc s(UPoly{1}, UPoly{0, 1});
    CHECK((s + s) == RatFunc(UPoly{2}, UPoly{0, 1}));
    CHECK_THROWS_AS(s.compose(UPoly{0}), Error);
    CHECK(s.compose(UPoly{1, 1}) == RatFunc(UPoly{1}, UPoly{1, 1}));
    CHECK((s * RatFunc(UPoly{0, 1})) == RatFunc(UPoly{1}));
}
