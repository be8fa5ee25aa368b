#include <doctest.h>

#include "hc/hypercircle.hpp"
#include "hc/text.hpp"
#include "properties.hpp"

using namespace hc;
using namespace hc::testing;

namespace {

MPoly mp(const char* s, unsigned n, const FieldPtr& f = nullptr) {
    std::map<std::string, FieldElement> c;
    if (f) c.emplace("a", FieldElement::generator(f));
    Fraction fr = parse_expression(s, descent_vars(n), c);
    return fr.num;
}

Ideal ideal(unsigned n, std::initializer_list<const char*> gens) {
    Ideal out{n, {}};
    for (const char* g : gens) out.gens.push_back(mp(g, n));
    return out;
}

ProjectivePoint point(std::vector<FieldElement> c) { return ProjectivePoint{std::move(c)}; }

}  // namespace

TEST_CASE("norm and decomposition over Q(i)") {
    FieldPtr f = gaussian_field();
    CHECK(norm(mp("t0 + a*t1", 2, f), f) == mp("t0^2 + t1^2", 2));
    Decomposition d = alpha_decompose(mp("1", 2, f), mp("t0 + a*t1", 2, f), f);
    CHECK(d.delta == mp("t0^2 + t1^2", 2));
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0] == mp("t0", 2));
    CHECK(d.components[1] == mp("-t1", 2));

    Decomposition sq = alpha_decompose(mp("(t0 + a*t1)^2", 2, f), mp("1", 2), f);
    CHECK(sq.delta == mp("1", 2));
    CHECK(sq.components[0] == mp("t0^2 - t1^2", 2));
    CHECK(sq.components[1] == mp("2*t0*t1", 2));
}

TEST_CASE("decomposition reconstructs random fractions") { CHECK(check_decomposition(99, 25) == ""); }

TEST_CASE("a parametrization over Q descends to the line t1 = 0") {
    FieldPtr f = gaussian_field();
    Witness w = witness_ideal(parametrization(f, {"t^2/(t+1)", "t-3"}), f);
    CHECK(ideal_equal(w.ideal, ideal(2, {"t1"})));
}

TEST_CASE("witness ideals") {
    SUBCASE("quartic example") {
        Witness w = witness_ideal(quartic_example(), quartic_field());
        Ideal expect = ideal(4, {"4*t2+12*t3-3", "5+2*t1-16*t3", "2*t0^2+24*t3*t0+80*t3^2-10*t0-52*t3+15"});
        CHECK(ideal_equal(w.ideal, expect));
        CHECK(dimension(w.ideal) == 1);
    }
    SUBCASE("cusp shifted by i: a line plus an embedded point") {
        Witness w = witness_ideal(parametrization(gaussian_field(), {"(t-a)^2", "(t-a)^3"}), gaussian_field());
        CHECK(dimension(w.ideal) == 1);
        // V(w) is the line t1 = 1; the ideal itself is not radical
        GroebnerBasis gb = buchberger(w.ideal);
        CHECK(normal_form(mp("(t1-1)^3", 2), gb).is_zero());
        CHECK_FALSE(normal_form(mp("t1-1", 2), gb).is_zero());
    }
    SUBCASE("parabola through i: points only") {
        Witness w = witness_ideal(parametrization(gaussian_field(), {"t+a", "t^2"}), gaussian_field());
        CHECK(ideal_equal(w.ideal, ideal(2, {"t0", "t1+1"})));
        CHECK(dimension(w.ideal) == 0);
    }
}

TEST_CASE("hypercircles of units") {
    FieldPtr f = gaussian_field();
    FieldElement i = FieldElement::generator(f);
    auto psi = unit_to_hypercircle({1, 0, 0, 1}, f);
    CHECK(render(psi[0], "t") == "t");
    CHECK(render(psi[1], "t") == "0");
    psi = unit_to_hypercircle({0, 1, 1, i}, f);
    CHECK(render(psi[0], "t") == "t/(t^2 + 1)");
    CHECK(render(psi[1], "t") == "-1/(t^2 + 1)");
    psi = unit_to_hypercircle({FieldElement::generator(quartic_field()), 0, 0, 1}, quartic_field());
    CHECK(render(psi[1], "t") == "t");
    CHECK(render(psi[0], "t") == "0");
    CHECK_THROWS_WITH(unit_to_hypercircle({1, 1, 1, 1}, f), "degenerate unit: ad - bc = 0");

    // round trip: sum a^k psi_k = u
    Random rnd(5);
    for (const FieldPtr& fld : {gaussian_field(), quartic_field()}) {
        for (int k = 0; k < 5; ++k) {
            LinearFraction u{rnd.element(fld), rnd.element(fld), rnd.element(fld), rnd.element(fld)};
            if ((u.a * u.d - u.b * u.c).is_zero()) continue;
            auto parts = unit_to_hypercircle(u, fld);
            RatFunc sum;
            FieldElement ak = lift(FieldElement(1), fld);
            for (const auto& p : parts) {
                sum = sum + RatFunc(UPoly::constant(ak)) * p;
                ak *= FieldElement::generator(fld);
            }
            CHECK(sum == RatFunc(UPoly{u.b, u.a}, UPoly{u.d, u.c}));
        }
    }
}

TEST_CASE("primitive point at infinity") {
    FieldElement i = FieldElement::generator(gaussian_field());
    CHECK(primitive_infinity_point(gaussian_field()) == point({i, 1, 0}));
    FieldPtr f = quartic_field();
    ProjectivePoint p = primitive_infinity_point(f);
    CHECK(p.coords.size() == 5);
    CHECK(p.coords[3] == FieldElement(1));
    CHECK(p.coords[4].is_zero());
    // x^2 + 6x + 10 over Q(g): [g + 6 : 1 : 0]
    FieldElement g = FieldElement::generator(gamma_field());
    CHECK(primitive_infinity_point(gamma_field()) == point({g + 6, 1, 0}));
}

TEST_CASE("points at infinity of witness ideals") {
    SUBCASE("quartic example") {
        Witness w = witness_ideal(quartic_example(), quartic_field());
        auto pts = points_at_infinity(w.ideal, quartic_field());
        REQUIRE(pts.size() == 2);
        for (const auto& p : pts) {
            FieldElement x = p.coords[0] / 2;  // a root of x^2 + 6x + 10
            CHECK((x * x + 6 * x + 10).is_zero());
            CHECK(p == point({2 * x, 8, -3, 1, 0}));
        }
        CHECK_FALSE(pts[0] == pts[1]);
        // every point lies on the leading forms of a degree-compatible basis
        for (const auto& g : buchberger(w.ideal).basis) {
            MPoly lf = leading_form(g);
            for (const auto& p : pts) {
                MPoly v = lf;
                for (unsigned k = 0; k < 4; ++k) v = substitute_value(v, k, p.coords[k]);
                CHECK(v.is_zero());
            }
        }
        SubfieldEmbedding emb = hypercircle_degree_field(pts, quartic_field());
        CHECK(emb.degree() == 2);
    }
    SUBCASE("a line") {
        auto pts = points_at_infinity(ideal(2, {"t1-1"}), gaussian_field());
        REQUIRE(pts.size() == 1);
        CHECK(pts[0] == point({1, 0, 0}));
        CHECK(hypercircle_degree_field(pts, gaussian_field()).degree() == 1);
    }
    SUBCASE("points only") {
        CHECK(points_at_infinity(ideal(2, {"t0", "t1+1"}), gaussian_field()).empty());
        CHECK(points_at_infinity(ideal(2, {"1"}), gaussian_field()).empty());
    }
    SUBCASE("primitive hypercircle contains the primitive point") {
        // unit 1/(t + i): psi = (t/(t^2+1), -1/(t^2+1)), implicitly t0^2 + t1^2 + t1 = 0
        Ideal circle = ideal(2, {"t0^2 + t1^2 + t1"});
        auto pts = points_at_infinity(circle, gaussian_field());
        ProjectivePoint prim = primitive_infinity_point(gaussian_field());
        CHECK(std::find(pts.begin(), pts.end(), prim) != pts.end());
        CHECK(hypercircle_degree_field({prim}, gaussian_field()).degree() == 2);
    }
}
