#include "hc/reparam.hpp"

#include "hc/error.hpp"
#include "hc/solve.hpp"

namespace hc {

namespace {

bool all_rational(const Parametrization& phi) {
    auto rational = [](const UPoly& p) {
        for (const auto& c : p.coeffs())
            if (!lower(c).is_rational_constant()) return false;
        return true;
    };
    for (const auto& f : phi.nums)
        if (!rational(f)) return false;
    return rational(phi.den);
}

// sum_i c_i g^i for the generator g of `top`.
FieldElement combine(const std::vector<FieldElement>& c, const FieldPtr& top) {
    const FieldElement g = FieldElement::generator(top);
    FieldElement acc = lift(FieldElement(), top);
    FieldElement gi = lift(FieldElement(1), top);
    for (const auto& x : c) {
        acc += x * gi;
        gi *= g;
    }
    return acc;
}

UPoly map_upoly(const UPoly& p, const auto& fn) {
    std::vector<FieldElement> c;
    for (const auto& x : p.coeffs()) c.push_back(fn(x));
    return UPoly(std::move(c));
}

std::vector<FieldElement> coefficients(const std::vector<RatFunc>& comps) {
    std::vector<FieldElement> out;
    for (const auto& c : comps) {
        for (const auto& x : c.num().coeffs()) out.push_back(x);
        for (const auto& x : c.den().coeffs()) out.push_back(x);
    }
    return out;
}

}  // namespace

std::vector<RatFunc> compose_shift(const Parametrization& phi, const AffineShift& shift) {
    if (shift.a.is_zero()) throw input_error("affine shift with a = 0");
    UPoly inner{shift.b, shift.a};
    std::vector<RatFunc> out;
    for (const auto& c : phi.components()) out.push_back(c.compose(inner));
    return out;
}

bool verify_reparametrization(const Parametrization& phi, const AffineShift& shift, const SubfieldEmbedding& emb) {
    for (const auto& x : coefficients(compose_shift(phi, shift)))
        if (!membership(x, emb)) return false;
    return true;
}

unsigned coefficient_field_degree(const std::vector<RatFunc>& comps, const FieldPtr& alpha_field, unsigned cap) {
    auto gens = coefficients(comps);
    return primitive_element(gens, alpha_field, cap).degree();
}

LineParam extract_line(const Ideal& witness, const std::vector<ProjectivePoint>& infinity, const FieldPtr& base,
                       const GroebnerOptions& options, std::vector<MPoly>* forms) {
    const unsigned m = witness.arity;
    std::vector<MPoly> lin = linear_part(witness, options);
    if (forms) *forms = lin;
    LineParam line;
    line.point.assign(m, FieldElement());
    line.direction.assign(m, FieldElement());

    auto coeff_of = [&](const MPoly& f, unsigned v) {
        Monomial mono;
        mono.e[v] = 1;
        return f.coeff(mono);
    };
    if (lin.size() + 1 == m) {
        std::vector<bool> pivot(m, false);
        std::vector<unsigned> pivot_of;
        bool ok = true;
        for (const auto& f : lin) {
            unsigned v = 0;
            while (v < m && coeff_of(f, v).is_zero()) ++v;
            if (v == m) {
                ok = false;
                break;
            }
            pivot[v] = true;
            pivot_of.push_back(v);
        }
        if (ok) {
            unsigned free = 0;
            while (pivot[free]) ++free;
            line.direction[free] = FieldElement(1);
            for (std::size_t i = 0; i < lin.size(); ++i) {
                // t_p + c*t_free + c0 = 0 in reduced echelon form
                const FieldElement lead = coeff_of(lin[i], pivot_of[i]);
                line.point[pivot_of[i]] = lower(-lin[i].constant_term() / lead);
                line.direction[pivot_of[i]] = lower(-coeff_of(lin[i], free) / lead);
            }
            return line;
        }
    }

    // direction from the point at infinity defined over the base
    const ProjectivePoint* dir = nullptr;
    for (const auto& p : infinity) {
        bool in_base = true;
        for (const auto& c : p.coords) in_base = in_base && lies_in(c, base);
        if (in_base) {
            dir = &p;
            break;
        }
    }
    if (!dir) throw internal_error("line extraction failed: no direction over the base field");
    ProjectivePoint v = dir->canonical();
    unsigned k = m;
    for (unsigned i = 0; i < m; ++i) {
        line.direction[i] = v.coords[i];
        if (!v.coords[i].is_zero()) k = i;
    }
    if (k == m) throw internal_error("line extraction failed: zero direction");
    // p_k = 0; unknowns p_j (j != k) are variables 0..m-2, s is variable m-1
    std::vector<MPoly> images;
    for (unsigned j = 0; j < m; ++j) {
        MPoly img = line.direction[j] * MPoly::variable(m, m - 1);
        if (j != k) img += MPoly::variable(m, j < k ? j : j - 1);
        images.push_back(std::move(img));
    }
    Ideal system{m - 1, {}};
    for (const auto& g : witness.gens) {
        MPoly s = substitute(g.widen(m), images);
        std::vector<std::vector<Term>> by_power;
        for (const auto& t : s.terms()) {
            unsigned e = t.m.e[m - 1];
            if (by_power.size() <= e) by_power.resize(e + 1);
            Monomial mono = t.m;
            mono.e[m - 1] = 0;
            by_power[e].push_back({mono, t.c});
        }
        for (auto& terms : by_power) {
            MPoly eq = MPoly::from_terms(m - 1, std::move(terms));
            if (!eq.is_zero()) system.gens.push_back(std::move(eq));
        }
    }
    auto sols = solutions_in_field(system, base, options);
    if (sols.empty()) throw internal_error("line extraction failed: no base point");
    for (unsigned j = 0; j < m; ++j)
        if (j != k) line.point[j] = sols[0][j < k ? j : j - 1];
    return line;
}

ReparamReport optimal_affine_reparametrize(const Parametrization& phi, const FieldPtr& alpha_field,
                                           const ReparamOptions& options) {
    if (!alpha_field || alpha_field->base()) throw input_error("reparametrization needs a simple extension of Q");
    const unsigned n = alpha_field->degree();
    ReparamReport rep;
    const FieldElement one = lift(FieldElement(1), alpha_field);
    const FieldElement zero = lift(FieldElement(), alpha_field);

    if (all_rational(phi)) {
        rep.status = ReparamStatus::Success;
        rep.path = ReparamPath::RationalInput;
        rep.r = 1;
        rep.gamma = make_embedding(alpha_field, zero);
        rep.shift = AffineShift{one, zero};
        rep.reparametrized = phi.components();
        return rep;
    }

    Witness w = witness_ideal(phi, alpha_field, options.groebner);
    rep.witness = w.ideal;
    rep.witness_dimension = dimension(w.ideal, options.groebner);
    rep.infinity_points = points_at_infinity(w.ideal, alpha_field, options.groebner);
    if (rep.infinity_points.empty()) {
        if (rep.witness_dimension == 1)
            throw internal_error("one-dimensional witness variety without points at infinity over the extension");
        rep.status = ReparamStatus::Fail;
        rep.path = ReparamPath::Zero;
        return rep;
    }
    SubfieldEmbedding emb = hypercircle_degree_field(rep.infinity_points, alpha_field, options.primitive_cap);
    rep.r = emb.degree();
    rep.gamma = emb;
    rep.status = ReparamStatus::Success;

    if (rep.r == n) {
        rep.path = ReparamPath::Full;
        rep.shift = AffineShift{one, zero};
        rep.reparametrized = phi.components();
        return rep;
    }

    if (rep.r == 1) {
        rep.path = ReparamPath::Rational;
        rep.line = extract_line(w.ideal, rep.infinity_points, nullptr, options.groebner, &rep.line_forms);
        rep.shift = AffineShift{combine(rep.line->direction, alpha_field), combine(rep.line->point, alpha_field)};
    } else {
        rep.path = ReparamPath::Tower;
        Tower tower = make_tower(emb, alpha_field->name());
        rep.relative_minpoly = relative_min_poly(emb);
        rep.tower = tower;
        auto to_tower = [&](const FieldElement& x) { return tower.to_tower(x); };
        Parametrization over;
        for (const auto& f : phi.nums) over.nums.push_back(map_upoly(f, to_tower));
        over.den = map_upoly(phi.den, to_tower);
        Witness w2 = witness_ideal(over, tower.field, options.groebner);
        rep.second_witness = w2.ideal;
        auto points2 = points_at_infinity(w2.ideal, tower.field, options.groebner);
        rep.line = extract_line(w2.ideal, points2, emb.gamma_field, options.groebner, &rep.line_forms);
        rep.shift = AffineShift{tower.from_tower(combine(rep.line->direction, tower.field)),
                                tower.from_tower(combine(rep.line->point, tower.field))};
    }
    if (rep.shift->a.is_zero()) throw internal_error("extracted line gives a degenerate shift");

    for (const auto& c : compose_shift(phi, *rep.shift)) {
        auto down = [&](const FieldElement& x) {
            auto y = to_subfield(x, emb);
            if (!y) throw internal_error("reparametrization is not defined over the subfield");
            return *y;
        };
        rep.reparametrized.emplace_back(map_upoly(c.num(), down), map_upoly(c.den(), down));
    }
    return rep;
}

}  // namespace hc
