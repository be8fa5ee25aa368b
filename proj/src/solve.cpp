#include "hc/solve.hpp"

#include <algorithm>

#include "hc/error.hpp"
#include "hc/tower.hpp"

namespace hc {

namespace {

using Point = std::vector<FieldElement>;

bool univariate_in(const MPoly& f, unsigned var) {
    for (const auto& t : f.terms())
        if (t.m.degree() != t.m.e[var]) return false;
    return true;
}

void solve_from(const std::vector<MPoly>& gens, unsigned arity, int var, const FieldPtr& field, Point& partial,
                std::vector<Point>& out, const GroebnerOptions& options) {
    if (var < 0) {
        for (const auto& g : gens) {
            MPoly s = g;
            for (unsigned i = 0; i < arity; ++i) s = substitute_value(s, i, partial[i]);
            if (!s.is_zero()) return;
        }
        out.push_back(partial);
        return;
    }
    GroebnerBasis gb = fglm(buchberger({arity, gens}, MonomialOrder::grevlex(), options), MonomialOrder::lex(), options);
    if (gb.is_unit()) return;
    const unsigned v = static_cast<unsigned>(var);
    const MPoly* uni = nullptr;
    for (const auto& g : gb.basis) {
        if (univariate_in(g, v)) {
            uni = &g;
            break;
        }
    }
    if (!uni) throw input_error("system is not zero-dimensional");
    for (const auto& root : roots_in_field(to_upoly(*uni, v), field)) {
        std::vector<MPoly> next;
        next.reserve(gb.basis.size());
        for (const auto& g : gb.basis) {
            MPoly s = substitute_value(g, v, root);
            if (!s.is_zero()) next.push_back(std::move(s));
        }
        // keeps the system zero-dimensional in all variables
        next.push_back(MPoly::variable(arity, v) - MPoly::constant(arity, root));
        partial[v] = root;
        solve_from(next, arity, var - 1, field, partial, out, options);
    }
}

}  // namespace

std::vector<std::vector<FieldElement>> solutions_in_field(const Ideal& ideal, const FieldPtr& field,
                                                          const GroebnerOptions& options) {
    std::vector<MPoly> gens;
    for (const auto& g : ideal.gens)
        if (!g.is_zero()) gens.push_back(g.widen(ideal.arity));
    Point partial(ideal.arity);
    std::vector<Point> out;
    solve_from(gens, ideal.arity, static_cast<int>(ideal.arity) - 1, field, partial, out, options);
    std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = canonical_compare(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

}  // namespace hc
