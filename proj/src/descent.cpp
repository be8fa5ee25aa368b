#include "hc/descent.hpp"

#include "hc/error.hpp"

namespace hc {

Parametrization Parametrization::from_components(const std::vector<RatFunc>& comps) {
    if (comps.empty()) throw input_error("parametrization without components");
    UPoly g = UPoly::constant(1);
    for (const auto& c : comps) g = divrem(g * c.den(), gcd(g, c.den())).first.monic();
    Parametrization p;
    p.den = g;
    for (const auto& c : comps) p.nums.push_back(c.num() * divrem(g, c.den()).first);
    return p;
}

std::vector<RatFunc> Parametrization::components() const {
    std::vector<RatFunc> out;
    for (const auto& f : nums) out.emplace_back(f, den);
    return out;
}

FieldPtr Parametrization::field() const {
    FieldPtr f;
    auto visit = [&](const UPoly& p) {
        for (const auto& c : p.coeffs()) f = common_field(f, lower(c).field());
    };
    for (const auto& n : nums) visit(n);
    visit(den);
    return f;
}

namespace {

// Coordinate polynomials of f over the base of `top`, one per power of the generator.
std::vector<MPoly> split(const MPoly& f, const FieldPtr& top) {
    const unsigned n = top->degree();
    std::vector<std::vector<Term>> parts(n);
    for (const auto& t : f.terms()) {
        FieldElement c = lift(t.c, top);
        for (unsigned i = 0; i < n; ++i)
            if (!c.coords()[i].is_zero()) parts[i].push_back({t.m, lower(c.coords()[i])});
    }
    std::vector<MPoly> out;
    for (auto& p : parts) out.push_back(MPoly::from_terms(f.arity(), std::move(p)));
    return out;
}

}  // namespace

MPoly norm(const MPoly& f, const FieldPtr& top) {
    if (f.is_zero()) throw input_error("norm of the zero polynomial");
    std::vector<MPoly> g = split(f, top);
    while (g.size() > 1 && g.back().is_zero()) g.pop_back();
    std::vector<MPoly> m;
    for (const auto& c : top->minpoly()) m.push_back(MPoly::constant(f.arity(), lower(c)));
    return resultant(m, g);
}

Decomposition alpha_decompose(const MPoly& num, const MPoly& den, const FieldPtr& top) {
    if (den.is_zero()) throw input_error("rational function with zero denominator");
    MPoly delta = norm(den, top);
    MPoly cofactor = exact_divide(delta, den);
    return {split(num * cofactor, top), delta};
}

MPoly descent_argument(const FieldPtr& top) {
    const unsigned n = top->degree();
    const FieldElement a = FieldElement::generator(top);
    MPoly t(n);
    FieldElement ai = lift(FieldElement(1), top);
    for (unsigned i = 0; i < n; ++i) {
        t += ai * MPoly::variable(n, i);
        ai *= a;
    }
    return t;
}

DescentResult weil_substitute(const Parametrization& phi, const FieldPtr& top) {
    const unsigned n = top->degree();
    const MPoly t = descent_argument(top);
    MPoly g = compose(phi.den, t);
    if (g.is_zero()) throw input_error("rational function with zero denominator");
    DescentResult out;
    out.delta = norm(g, top);
    MPoly cofactor = exact_divide(out.delta, g);
    out.F.assign(n, {});
    for (const auto& f : phi.nums) {
        auto parts = split(compose(f, t) * cofactor, top);
        for (unsigned i = 0; i < n; ++i) out.F[i].push_back(std::move(parts[i]));
    }
    return out;
}

Witness witness_ideal(const Parametrization& phi, const FieldPtr& top, const GroebnerOptions& options) {
    const unsigned n = top->degree();
    Witness w;
    w.descent = weil_substitute(phi, top);
    Ideal gens{n, {}};
    for (unsigned i = 1; i < n; ++i)
        for (const auto& f : w.descent.F[i])
            if (!f.is_zero()) gens.gens.push_back(f);
    w.ideal = saturate(gens, w.descent.delta, options);
    return w;
}

}  // namespace hc
