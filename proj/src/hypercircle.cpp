#include "hc/hypercircle.hpp"

#include <algorithm>
#include <string>

#include "hc/error.hpp"
#include "hc/solve.hpp"

namespace hc {

std::vector<RatFunc> unit_to_hypercircle(const LinearFraction& u, const FieldPtr& top) {
    if ((u.a * u.d - u.b * u.c).is_zero()) throw input_error("degenerate unit: ad - bc = 0");
    MPoly t = MPoly::variable(1, 0);
    MPoly num = u.a * t + MPoly::constant(1, u.b);
    MPoly den = u.c * t + MPoly::constant(1, u.d);
    Decomposition d = alpha_decompose(num, den, top);
    std::vector<RatFunc> out;
    for (const auto& c : d.components) out.emplace_back(to_upoly(c), to_upoly(d.delta));
    return out;
}

ProjectivePoint ProjectivePoint::canonical() const {
    ProjectivePoint p = *this;
    for (std::size_t i = p.coords.size(); i-- > 0;) {
        if (p.coords[i].is_zero()) continue;
        FieldElement inv = p.coords[i].inverse();
        for (auto& c : p.coords) c = lower(c * inv);
        return p;
    }
    throw internal_error("projective point with all coordinates zero");
}

bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.coords.size() != q.coords.size()) return false;
    return p.canonical().coords == q.canonical().coords;
}

ProjectivePoint primitive_infinity_point(const FieldPtr& top) {
    UPoly m(top->minpoly());
    UPoly lin{-FieldElement::generator(top), 1};
    auto [q, r] = divrem(m, lin);
    if (!r.is_zero()) throw internal_error("generator is not a root of its minimal polynomial");
    ProjectivePoint p;
    for (const auto& c : q.coeffs()) p.coords.push_back(lower(c));
    p.coords.emplace_back(0);
    return p;
}

std::vector<ProjectivePoint> points_at_infinity(const Ideal& ideal, const FieldPtr& top, const GroebnerOptions& options) {
    const unsigned n = ideal.arity;
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(), options);
    std::vector<ProjectivePoint> out;
    if (gb.is_unit()) return out;
    // homogenize, then h = 0: the top-degree forms
    std::vector<MPoly> forms;
    for (const auto& g : gb.basis) forms.push_back(leading_form(g));
    // every projective point has a last nonzero coordinate k, scaled to 1
    for (unsigned k = n; k-- > 0;) {
        std::vector<MPoly> images;
        for (unsigned i = 0; i < n; ++i) {
            if (i < k) images.push_back(MPoly::variable(k, i));
            else images.push_back(MPoly::constant(k, i == k ? 1 : 0));
        }
        Ideal affine{k, {}};
        for (const auto& f : forms) {
            MPoly s = substitute(f, images);
            if (!s.is_zero()) affine.gens.push_back(s);
        }
        std::vector<std::vector<FieldElement>> sols;
        try {
            sols = solutions_in_field(affine, top, options);
        } catch (const Error& e) {
            if (std::string(e.what()) != "system is not zero-dimensional") throw;
            throw internal_error("unexpected positive-dimensional infinity");
        }
        for (auto& s : sols) {
            ProjectivePoint p;
            p.coords = std::move(s);
            p.coords.emplace_back(1);
            while (p.coords.size() < n + 1) p.coords.emplace_back(0);
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), [](const ProjectivePoint& a, const ProjectivePoint& b) {
        for (std::size_t i = 0; i < a.coords.size(); ++i) {
            int c = canonical_compare(a.coords[i], b.coords[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

SubfieldEmbedding hypercircle_degree_field(const std::vector<ProjectivePoint>& points, const FieldPtr& alpha_field,
                                           unsigned cap) {
    if (points.empty()) throw internal_error("no points at infinity");
    ProjectivePoint p = points.front().canonical();
    std::vector<FieldElement> gens(p.coords.begin(), p.coords.end() - 1);
    return primitive_element(gens, alpha_field, cap);
}

}  // namespace hc
