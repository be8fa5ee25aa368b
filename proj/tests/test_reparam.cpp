#include <doctest.h>

#include "hc/error.hpp"
#include "hc/text.hpp"
#include "properties.hpp"

using namespace hc;
using namespace hc::testing;

namespace {

FieldElement gamma_p() { return elem(quartic_field(), {q(0), q(-4), q(3, 2), q(-1, 2)}); }

std::vector<std::string> rendered(const std::vector<RatFunc>& comps) {
    std::vector<std::string> out;
    for (const auto& c : comps) out.push_back(render(c, "t"));
    return out;
}

}  // namespace

TEST_CASE("quartic example") {
    const Parametrization phi = quartic_example();
    ReparamReport rep = optimal_affine_reparametrize(phi, quartic_field());
    REQUIRE(rep.status == ReparamStatus::Success);
    CHECK(rep.path == ReparamPath::Tower);
    CHECK(rep.r == 2);
    CHECK(rep.witness_dimension == 1);
    CHECK(rep.infinity_points.size() == 2);
    CHECK(rep.gamma->gamma_minpoly == parse_upoly("x^2+6*x+10", "x"));
    // the chosen gamma is one of the two roots
    FieldElement g = rep.gamma->gamma_in_alpha;
    CHECK((g == gamma_p() || g == -6 - gamma_p()));

    const AffineShift& s = *rep.shift;
    CHECK(s.a == FieldElement(1));
    CHECK(verify_reparametrization(phi, s, *rep.gamma));
    CHECK_FALSE(verify_reparametrization(phi, {1, 0}, *rep.gamma));
    CHECK(coefficient_field_degree(compose_shift(phi, s), quartic_field()) == 2);

    // the output is the published one up to t -> u*t + v over Q(g)
    const FieldPtr gf = rep.gamma->gamma_field;
    const FieldElement gg = FieldElement::generator(gf);
    bool matched = false;
    for (const FieldElement& published_gamma : {gg, -6 - gg})
        matched = matched || !cross_composition(rep.reparametrized, published_output(published_gamma), gf).empty();
    CHECK(matched);
}

TEST_CASE("published shift for the published gamma") {
    // t -> t + (3*gamma + 7)/2 * a with gamma = -4a + 3/2 a^2 - 1/2 a^3
    const FieldPtr f = quartic_field();
    const FieldElement a = FieldElement::generator(f);
    SubfieldEmbedding emb = make_embedding(f, gamma_p());
    AffineShift shift{1, (3 * gamma_p() + 7) / 2 * a};
    CHECK(verify_reparametrization(quartic_example(), shift, emb));
}

TEST_CASE("second descent over the tower") {
    SubfieldEmbedding emb = make_embedding(quartic_field(), gamma_p());
    Tower tower = make_tower(emb, "a");
    Witness w = witness_ideal(over_tower(quartic_example(), tower), tower.field);
    auto lin = linear_part(w.ideal);
    REQUIRE(lin.size() == 1);
    const FieldElement g = FieldElement::generator(emb.gamma_field);
    MPoly expect = 2 * MPoly::variable(2, 1) - MPoly::constant(2, 3 * g + 7);
    CHECK(2 * lin[0] == expect);
    CHECK(dimension(w.ideal) == 1);
}

TEST_CASE("cusp shifted by i") {
    FieldPtr f = gaussian_field();
    ReparamReport rep = optimal_affine_reparametrize(parametrization(f, {"(t-a)^2", "(t-a)^3"}), f);
    REQUIRE(rep.status == ReparamStatus::Success);
    CHECK(rep.path == ReparamPath::Rational);
    CHECK(rep.r == 1);
    CHECK(rep.shift->a == FieldElement(1));
    CHECK(rep.shift->b == FieldElement::generator(f));
    CHECK(rendered(rep.reparametrized) == std::vector<std::string>{"t^2", "t^3"});
}

TEST_CASE("curves not defined over Q fail") {
    FieldPtr f = gaussian_field();
    ReparamReport rep = optimal_affine_reparametrize(parametrization(f, {"t+a", "t^2"}), f);
    CHECK(rep.status == ReparamStatus::Fail);
    CHECK(rep.witness_dimension == 0);
    CHECK(rep.infinity_points.empty());
    CHECK_FALSE(rep.shift);

    // a line with an irrational slope is still defined over Q(i) only
    rep = optimal_affine_reparametrize(parametrization(f, {"t", "a*t^2"}), f);
    CHECK(rep.status == ReparamStatus::Fail);
    CHECK(dimension(rep.witness) <= 0);
}

TEST_CASE("rational input short-circuits") {
    FieldPtr f = quartic_field();
    ReparamReport rep = optimal_affine_reparametrize(parametrization(f, {"t^2/(t-1)", "3*t"}), f);
    CHECK(rep.status == ReparamStatus::Success);
    CHECK(rep.path == ReparamPath::RationalInput);
    CHECK(rep.r == 1);
    CHECK(rep.shift->a == FieldElement(1));
    CHECK(rep.shift->b.is_zero());
}

TEST_CASE("the output of a run is already optimal") {
    ReparamReport first = optimal_affine_reparametrize(quartic_example(), quartic_field());
    REQUIRE(first.status == ReparamStatus::Success);
    // over Q(g) itself the coefficients generate everything: identity
    FieldPtr gf = first.gamma->gamma_field;
    ReparamReport again = optimal_affine_reparametrize(Parametrization::from_components(first.reparametrized), gf);
    CHECK(again.status == ReparamStatus::Success);
    CHECK(again.path == ReparamPath::Full);
    CHECK(again.r == 2);
    CHECK(again.shift->a == FieldElement(1));
    CHECK(again.shift->b.is_zero());
}

TEST_CASE("a curve over Q that needs the full field for affine changes") {
    // the parabola y = x^2 through the unit i + 1/t: only a Moebius map removes i
    FieldPtr f = gaussian_field();
    ReparamReport rep = optimal_affine_reparametrize(parametrization(f, {"a+1/t", "(a+1/t)^2"}), f);
    REQUIRE(rep.status == ReparamStatus::Success);
    CHECK(rep.path == ReparamPath::Full);
    CHECK(rep.r == 2);
    CHECK(rep.shift->a == FieldElement(1));
    CHECK(rep.shift->b.is_zero());
}

TEST_CASE("minimality over random shifts") {
    SubfieldEmbedding optimal = make_embedding(quartic_field(), gamma_p());
    CHECK(check_minimality(17, 20, optimal) == "");

    // shifts that differ from an optimal one by an affine map over Q(g) stay optimal
    const FieldPtr f = quartic_field();
    const Parametrization phi = quartic_example();
    ReparamReport rep = optimal_affine_reparametrize(phi, f);
    Random rnd(23);
    for (int k = 0; k < 5; ++k) {
        FieldElement u = rep.gamma->embed(rnd.nonzero_element(rep.gamma->gamma_field));
        FieldElement v = rep.gamma->embed(rnd.element(rep.gamma->gamma_field));
        AffineShift s{rep.shift->a * u, rep.shift->a * v + rep.shift->b};
        auto comps = compose_shift(phi, s);
        SubfieldEmbedding emb = primitive_element(coefficients_of(comps), f);
        CHECK(emb.degree() == 2);
        CHECK_FALSE(roots_in_field(emb.gamma_minpoly, rep.gamma->gamma_field).empty());
    }
}

TEST_CASE("degenerate shifts are rejected") {
    CHECK_THROWS_WITH(compose_shift(quartic_example(), {0, 1}), "affine shift with a = 0");
}
