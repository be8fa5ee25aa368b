#include <doctest.h>

#include "hc/error.hpp"
#include "hc/solve.hpp"
#include "hc/text.hpp"
#include "hc/tower.hpp"
#include "properties.hpp"

using namespace hc;
using namespace hc::testing;

namespace {

UPoly poly(const char* s, const FieldPtr& f = nullptr) {
    std::map<std::string, FieldElement> c;
    if (f) c.emplace(f->name(), FieldElement::generator(f));
    return parse_upoly(s, "x", c);
}

FieldElement gamma_p() { return elem(quartic_field(), {q(0), q(-4), q(3, 2), q(-1, 2)}); }

}  // namespace

TEST_CASE("make_extension validates irreducibility") {
    CHECK(make_extension(nullptr, poly("x^4-4*x^3+12*x^2-16*x+8").coeffs(), "a")->degree() == 4);
    CHECK_THROWS_WITH(make_extension(nullptr, poly("x^2-1").coeffs(), "a"), "not irreducible: factor x - 1");
    // no rational root, but a quadratic factor
    CHECK_THROWS_WITH(make_extension(nullptr, poly("x^4+4").coeffs(), "a"),
                      doctest::Contains("not irreducible: factor x^2"));
    FieldPtr g = gamma_field();
    FieldPtr tower = make_extension(g, poly("x^2+(-8-2*g)*x+8+2*g", g).coeffs(), "a");
    CHECK(absolute_degree(tower) == 4);
    // i is in Q(i), so x^2 + 1 splits there
    CHECK_THROWS_AS(make_extension(gaussian_field(), poly("x^2+1").coeffs(), "b"), Error);
}

TEST_CASE("rational roots") {
    auto roots = [](const char* s) { return rational_roots(poly(s)); };
    CHECK(roots("x^2-1") == std::vector<Rational>{q(-1), q(1)});
    CHECK(roots("x^4-4*x^3+12*x^2-16*x+8").empty());
    CHECK(roots("2*x-3") == std::vector<Rational>{q(3, 2)});
    CHECK(roots("(x-1/2)^3*(x+3)*(x^2+1)") == std::vector<Rational>{q(-3), q(1, 2)});
    CHECK(roots("x^9 - 9/4*x^7 + 105/64*x^5 - 51/128*x^3 + 1/128*x") == std::vector<Rational>{q(-1), q(0), q(1)});

    // products of known linear factors with an irreducible quadratic
    Random rnd(7);
    for (int k = 0; k < 30; ++k) {
        std::vector<Rational> expect;
        UPoly f{FieldElement(1), FieldElement(1), FieldElement(1)};
        for (int j = 0; j < 3; ++j) {
            Rational r = rnd.rational(20);
            f = f * UPoly{FieldElement(-r), FieldElement(1)};
            expect.push_back(r);
        }
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        CHECK(rational_roots(f) == expect);
    }
}

TEST_CASE("minimal polynomials over Q") {
    CHECK(min_poly_over_Q(gamma_p()) == poly("x^2+6*x+10"));
    CHECK(min_poly_over_Q(FieldElement(5)) == poly("x-5"));
    CHECK(min_poly_over_Q(FieldElement::generator(quartic_field())) == poly("x^4-4*x^3+12*x^2-16*x+8"));
    Random rnd(11);
    for (int k = 0; k < 10; ++k) {
        FieldElement x = rnd.element(quartic_field());
        UPoly m = min_poly_over_Q(x);
        CHECK(m.eval(x).is_zero());
        CHECK(4 % m.degree() == 0);
    }
}

TEST_CASE("subfield membership and primitive elements") {
    SubfieldEmbedding emb = make_embedding(quartic_field(), gamma_p());
    CHECK(emb.degree() == 2);
    CHECK(membership(FieldElement(8), emb) == std::vector<Rational>{q(8), q(0)});
    CHECK(membership(2 * gamma_p(), emb) == std::vector<Rational>{q(0), q(2)});
    CHECK_FALSE(membership(FieldElement::generator(quartic_field()), emb));
    CHECK(emb.embed(FieldElement::generator(emb.gamma_field)) == gamma_p());

    SubfieldEmbedding p = primitive_element({2 * gamma_p(), FieldElement(8), FieldElement(-3), FieldElement(1)},
                                            quartic_field());
    CHECK(p.degree() == 2);
    CHECK(p.gamma_minpoly == poly("x^2+6*x+10"));
    CHECK(primitive_element({FieldElement(7)}, quartic_field()).degree() == 1);
    SubfieldEmbedding full = primitive_element({FieldElement::generator(quartic_field())}, quartic_field());
    CHECK(full.degree() == 4);
    CHECK(full.gamma_minpoly == poly("x^4-4*x^3+12*x^2-16*x+8"));
}

TEST_CASE("relative minimal polynomial and the tower") {
    SubfieldEmbedding emb = make_embedding(quartic_field(), gamma_p());
    CHECK(relative_min_poly(emb) == poly("x^2+(-8-2*g)*x+8+2*g", emb.gamma_field));

    Tower t = make_tower(emb, "a");
    FieldElement a = FieldElement::generator(quartic_field());
    CHECK(t.from_tower(t.to_tower(a)) == a);
    CHECK(t.to_tower(FieldElement(3)) == FieldElement(3));
    // an element written in the tower comes back unchanged
    FieldPtr g = emb.gamma_field;
    FieldElement gg = FieldElement::generator(g);
    FieldElement x = lift(-39 - 15 * gg, t.field) + lift(21 + 9 * gg, t.field) * FieldElement::generator(t.field);
    CHECK(t.to_tower(t.from_tower(x)) == x);

    Random rnd(3);
    for (int k = 0; k < 100; ++k) {
        FieldElement u = rnd.element(quartic_field()), v = rnd.element(quartic_field());
        CHECK(t.from_tower(t.to_tower(u)) == u);
        CHECK(t.to_tower(u * v) == t.to_tower(u) * t.to_tower(v));
    }
}

TEST_CASE("roots in a field") {
    auto roots = roots_in_field(poly("x^2+6*x+10"), quartic_field());
    REQUIRE(roots.size() == 2);
    CHECK(std::find(roots.begin(), roots.end(), gamma_p()) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), -6 - gamma_p()) != roots.end());
    CHECK(roots_in_field(poly("x^2+1"), nullptr).empty());
    FieldPtr f = quartic_field();
    FieldElement a = FieldElement::generator(f);
    auto r2 = roots_in_field(UPoly{-a, 1} * UPoly{-2, 1}, f);
    REQUIRE(r2.size() == 2);
    CHECK((r2[0] == a || r2[1] == a));
    CHECK((r2[0] == FieldElement(2) || r2[1] == FieldElement(2)));
}

TEST_CASE("roots in a field: soundness and completeness on a box") {
    CHECK(check_roots(2024, 30) == "");
}

TEST_CASE("solving zero-dimensional systems") {
    // x^2 + y^2 = 1, x = y: only irrational points
    Ideal circle{2, {MPoly::variable(2, 0) * MPoly::variable(2, 0) + MPoly::variable(2, 1) * MPoly::variable(2, 1) -
                         MPoly::constant(2, 1),
                     MPoly::variable(2, 0) - MPoly::variable(2, 1)}};
    CHECK(solutions_in_field(circle, nullptr).empty());
    Ideal pts{2, {MPoly::variable(2, 0) * MPoly::variable(2, 0) - MPoly::constant(2, 4),
                  MPoly::variable(2, 1) - MPoly::variable(2, 0) - MPoly::constant(2, 1)}};
    auto sols = solutions_in_field(pts, nullptr);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == std::vector<FieldElement>{-2, -1});
    CHECK(sols[1] == std::vector<FieldElement>{2, 3});
    Ideal line{2, {MPoly::variable(2, 0) - MPoly::variable(2, 1)}};
    CHECK_THROWS_WITH(solutions_in_field(line, nullptr), "system is not zero-dimensional");
}
