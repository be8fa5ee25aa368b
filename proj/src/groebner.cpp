#include "hc/groebner.hpp"

#include <algorithm>
#include <map>

#include "hc/error.hpp"
#include "hc/linalg.hpp"

namespace hc {

namespace {

bool grevlex_greater(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
    unsigned da = 0, db = 0;
    for (unsigned i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da > db;
    for (unsigned i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    }
    return false;
}

}  // namespace

bool MonomialOrder::greater(const Monomial& a, const Monomial& b, unsigned arity) const {
    switch (kind) {
        case Kind::Lex:
            for (unsigned i = 0; i < arity; ++i) {
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
            }
            return false;
        case Kind::GrevLex:
            return grevlex_greater(a, b, 0, arity);
        case Kind::Block: {
            if (grevlex_greater(a, b, 0, block)) return true;
            if (grevlex_greater(b, a, 0, block)) return false;
            return grevlex_greater(a, b, block, arity);
        }
    }
    return false;
}

namespace {

// Terms sorted descending in a given monomial order.
using OPoly = std::vector<Term>;

struct OrderCtx {
    MonomialOrder order;
    unsigned arity;
    bool greater(const Monomial& a, const Monomial& b) const { return order.greater(a, b, arity); }
};

OPoly to_ordered(const MPoly& f, const OrderCtx& ctx) {
    OPoly p = f.terms();
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ctx.greater(a.m, b.m); });
    return p;
}

MPoly from_ordered(const OPoly& p, unsigned arity) { return MPoly::from_terms(arity, p); }

void make_monic(OPoly& p) {
    if (p.empty() || p[0].c.is_one()) return;
    const FieldElement inv = p[0].c.inverse();
    for (auto& t : p) t.c *= inv;
}

// p[from..] - c * m * g, with the result's head strictly after the cancelled term.
OPoly sub_mul(const OPoly& p, std::size_t from, const FieldElement& c, const Monomial& m, const OPoly& g,
              const OrderCtx& ctx) {
    OPoly out;
    out.reserve(p.size() - from + g.size());
    std::size_t i = from, j = 0;
    while (i < p.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(p[i++]);
            continue;
        }
        Monomial gm = g[j].m * m;
        if (i == p.size() || ctx.greater(gm, p[i].m)) {
            out.push_back({gm, -(c * g[j].c)});
            ++j;
        } else if (ctx.greater(p[i].m, gm)) {
            out.push_back(p[i++]);
        } else {
            FieldElement v = p[i].c - c * g[j].c;
            if (!v.is_zero()) out.push_back({gm, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

struct Reducer {
    const std::vector<OPoly>* polys;
    std::vector<std::size_t> active;  // indices into *polys, monic

    const OPoly* find_divisor(const Monomial& m) const {
        for (auto idx : active) {
            const OPoly& g = (*polys)[idx];
            if (g[0].m.divides(m)) return &g;
        }
        return nullptr;
    }
};

// Full reduction: every term of the result is irreducible.
OPoly reduce(OPoly p, const Reducer& red, const OrderCtx& ctx) {
    OPoly rem;
    std::size_t head = 0;
    while (head < p.size()) {
        if (const OPoly* g = red.find_divisor(p[head].m)) {
            const FieldElement c = p[head].c;  // divisor is monic
            const Monomial m = p[head].m / (*g)[0].m;
            p = sub_mul(p, head, c, m, *g, ctx);
            head = 0;
        } else {
            rem.push_back(p[head]);
            ++head;
        }
    }
    return rem;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::size_t serial;
};

OPoly spoly(const OPoly& f, const OPoly& g, const OrderCtx& ctx) {
    Monomial l = lcm(f[0].m, g[0].m);
    // (l/lm f) * f / lc f - (l/lm g) * g / lc g
    OPoly a;
    const FieldElement fi = f[0].c.inverse();
    const Monomial mf = l / f[0].m;
    for (const auto& t : f) a.push_back({t.m * mf, t.c * fi});
    const FieldElement gi = g[0].c.inverse();
    return sub_mul(a, 0, gi, l / g[0].m, g, ctx);
}

}  // namespace

Term leading_term(const MPoly& f, const MonomialOrder& order) {
    if (f.is_zero()) throw internal_error("leading term of zero");
    const Term* best = &f.terms()[0];
    for (const auto& t : f.terms())
        if (order.greater(t.m, best->m, f.arity())) best = &t;
    return *best;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options) {
    const OrderCtx ctx{order, ideal.arity};
    std::vector<OPoly> polys;
    std::vector<bool> in_basis;
    std::vector<Pair> pairs;
    std::size_t serial = 0;

    auto basis_indices = [&] {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < polys.size(); ++k)
            if (in_basis[k]) idx.push_back(k);
        return idx;
    };

    // Gebauer-Moeller installation of a new element
    auto update = [&](OPoly h) {
        const std::size_t hi = polys.size();
        polys.push_back(std::move(h));
        in_basis.push_back(false);
        const Monomial& lh = polys[hi][0].m;
        auto current = basis_indices();

        std::vector<Pair> c, d;
        for (auto g : current) c.push_back({g, hi, lcm(polys[g][0].m, lh), 0});
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Pair& p = c[k];
            bool keep = polys[p.i][0].m.coprime(lh);
            if (!keep) {
                keep = true;
                for (std::size_t o = k + 1; o < c.size() && keep; ++o)
                    if (c[o].lcm.divides(p.lcm)) keep = false;
                for (const auto& q : d)
                    if (keep && q.lcm.divides(p.lcm)) keep = false;
            }
            if (keep) d.push_back(p);
        }
        std::vector<Pair> next;
        for (auto& p : pairs) {
            const Monomial l1 = lcm(polys[p.i][0].m, lh), l2 = lcm(polys[p.j][0].m, lh);
            bool drop = lh.divides(p.lcm) && !(l1 == p.lcm) && !(l2 == p.lcm);
            if (!drop) next.push_back(p);
        }
        for (auto& p : d) {
            if (polys[p.i][0].m.coprime(lh)) continue;
            p.serial = serial++;
            next.push_back(p);
        }
        pairs = std::move(next);
        for (auto g : current)
            if (lh.divides(polys[g][0].m)) in_basis[g] = false;
        in_basis[hi] = true;
    };

    Reducer red{&polys, {}};
    for (const auto& f : ideal.gens) {
        if (f.is_zero()) continue;
        red.active = basis_indices();
        OPoly h = reduce(to_ordered(f, ctx), red, ctx);
        if (h.empty()) continue;
        make_monic(h);
        if (h[0].m.degree() == 0) return {ideal.arity, order, {MPoly::constant(ideal.arity, FieldElement(1))}};
        update(std::move(h));
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            unsigned da = a.lcm.degree(), db = b.lcm.degree();
            if (da != db) return da < db;
            if (ctx.greater(b.lcm, a.lcm)) return true;
            if (ctx.greater(a.lcm, b.lcm)) return false;
            return a.serial < b.serial;
        });
        Pair p = *best;
        pairs.erase(best);
        if (++processed > options.pair_budget) throw budget_error("groebner budget exceeded");
        red.active = basis_indices();
        OPoly h = reduce(spoly(polys[p.i], polys[p.j], ctx), red, ctx);
        if (h.empty()) continue;
        make_monic(h);
        if (h[0].m.degree() == 0) return {ideal.arity, order, {MPoly::constant(ideal.arity, FieldElement(1))}};
        update(std::move(h));
    }

    // interreduce the minimal basis
    auto idx = basis_indices();
    std::vector<OPoly> result;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        red.active.clear();
        for (std::size_t o = 0; o < idx.size(); ++o)
            if (o != k) red.active.push_back(idx[o]);
        const OPoly& g = polys[idx[k]];
        OPoly tail(g.begin() + 1, g.end());
        OPoly r = reduce(std::move(tail), red, ctx);
        r.insert(r.begin(), g[0]);
        result.push_back(std::move(r));
    }
    std::sort(result.begin(), result.end(), [&](const OPoly& a, const OPoly& b) { return ctx.greater(b[0].m, a[0].m); });
    GroebnerBasis gb{ideal.arity, order, {}};
    for (const auto& r : result) gb.basis.push_back(from_ordered(r, ideal.arity));
    return gb;
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& g) {
    const OrderCtx ctx{g.order, std::max(g.arity, f.arity())};
    std::vector<OPoly> polys;
    for (const auto& b : g.basis) polys.push_back(to_ordered(b, ctx));
    Reducer red{&polys, {}};
    for (std::size_t k = 0; k < polys.size(); ++k) red.active.push_back(k);
    return from_ordered(reduce(to_ordered(f, ctx), red, ctx), ctx.arity);
}

GroebnerBasis fglm(const GroebnerBasis& g, const MonomialOrder& target, const GroebnerOptions& options) {
    if (g.is_unit()) return {g.arity, target, g.basis};
    if (dimension(g) != 0) throw input_error("system is not zero-dimensional");
    const unsigned n = g.arity;
    const OrderCtx src{g.order, n}, dst{target, n};
    std::vector<OPoly> polys;
    for (const auto& b : g.basis) polys.push_back(to_ordered(b, src));
    Reducer red{&polys, {}};
    for (std::size_t k = 0; k < polys.size(); ++k) red.active.push_back(k);
    auto nf = [&](const Monomial& m) {
        return from_ordered(reduce({{m, FieldElement(1)}}, red, src), n);
    };

    // echelon rows over the quotient: r_j has coefficient 1 at pivot_j and 0 at
    // every earlier pivot; combo_j is the target-side polynomial with NF r_j
    struct Row {
        MPoly r, combo;
        Monomial pivot;
    };
    std::vector<Row> rows;
    std::vector<Monomial> staircase, leads, queue{Monomial{}};
    std::vector<MPoly> result;
    std::size_t steps = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(),
                                   [&](const Monomial& a, const Monomial& b) { return dst.greater(b, a); });
        Monomial m = *it;
        queue.erase(it);
        if (std::find(staircase.begin(), staircase.end(), m) != staircase.end()) continue;
        if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) continue;
        if (++steps > options.pair_budget) throw budget_error("groebner budget exceeded");
        MPoly v = nf(m);
        MPoly combo = MPoly::term(n, m, FieldElement(1));
        for (const auto& row : rows) {
            FieldElement c = v.coeff(row.pivot);
            if (c.is_zero()) continue;
            v -= c * row.r;
            combo -= c * row.combo;
        }
        if (v.is_zero()) {
            leads.push_back(m);
            result.push_back(std::move(combo));
            continue;
        }
        const Term& head = v.terms().front();
        const FieldElement inv = head.c.inverse();
        rows.push_back({inv * v, inv * combo, head.m});
        staircase.push_back(m);
        for (unsigned i = 0; i < n; ++i) {
            Monomial x = m;
            ++x.e[i];
            queue.push_back(x);
        }
    }
    std::sort(result.begin(), result.end(), [&](const MPoly& a, const MPoly& b) {
        return dst.greater(leading_term(b, target).m, leading_term(a, target).m);
    });
    return {n, target, std::move(result)};
}

MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order) {
    const OrderCtx ctx{order, std::max(f.arity(), g.arity())};
    return from_ordered(spoly(to_ordered(f, ctx), to_ordered(g, ctx), ctx), ctx.arity);
}

bool is_groebner_basis(const GroebnerBasis& g) {
    for (std::size_t i = 0; i < g.basis.size(); ++i)
        for (std::size_t j = i + 1; j < g.basis.size(); ++j)
            if (!normal_form(s_polynomial(g.basis[i], g.basis[j], g.order), g).is_zero()) return false;
    return true;
}

Ideal eliminate(const Ideal& ideal, unsigned k, const GroebnerOptions& options) {
    if (k >= ideal.arity && ideal.arity > 0) throw input_error("cannot eliminate every variable");
    if (k == 0) return buchberger(ideal, MonomialOrder::grevlex(), options).ideal();
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::elimination(k), options);
    Ideal out{ideal.arity, {}};
    for (const auto& g : gb.basis) {
        Term lt = leading_term(g, gb.order);
        bool free = true;
        for (unsigned v = 0; v < k; ++v)
            if (lt.m.e[v]) free = false;
        if (free) out.gens.push_back(g);
    }
    return out;
}

Ideal saturate(const Ideal& ideal, const MPoly& f, const GroebnerOptions& options) {
    if (f.is_zero()) throw input_error("saturation by the zero polynomial");
    const unsigned n = ideal.arity;
    if (n + 1 > kMaxVars) throw input_error("too many variables");
    std::vector<MPoly> shift;
    for (unsigned i = 0; i < n; ++i) shift.push_back(MPoly::variable(n + 1, i + 1));
    Ideal ext{n + 1, {}};
    for (const auto& g : ideal.gens) ext.gens.push_back(substitute(g.widen(n), shift));
    MPoly z = MPoly::variable(n + 1, 0);
    ext.gens.push_back(MPoly::constant(n + 1, FieldElement(1)) - z * substitute(f.widen(n), shift));
    Ideal elim = eliminate(ext, 1, options);
    Ideal out{n, {}};
    for (const auto& g : elim.gens) out.gens.push_back(dehomogenize(g, 0));
    return out;
}

int dimension(const GroebnerBasis& g) {
    if (g.is_unit()) return -1;
    std::vector<Monomial> leads;
    for (const auto& b : g.basis) leads.push_back(leading_term(b, g.order).m);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.arity); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (unsigned v = 0; v < g.arity; ++v)
                if (m.e[v] && !(mask & (1u << v))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

int dimension(const Ideal& ideal, const GroebnerOptions& options) { return dimension(buchberger(ideal, MonomialOrder::grevlex(), options)); }

bool ideal_contains(const GroebnerBasis& g, const Ideal& b) {
    return std::all_of(b.gens.begin(), b.gens.end(), [&](const MPoly& f) { return normal_form(f, g).is_zero(); });
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
    if (a.arity != b.arity) return false;
    return ideal_contains(buchberger(a, MonomialOrder::grevlex(), options), b) &&
           ideal_contains(buchberger(b, MonomialOrder::grevlex(), options), a);
}

std::vector<MPoly> linear_part(const Ideal& ideal, const GroebnerOptions& options) {
    const unsigned m = ideal.arity;
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(), options);
    // columns: t0..t_{m-1}, 1
    std::vector<MPoly> forms;
    for (unsigned v = 0; v < m; ++v) forms.push_back(MPoly::variable(m, v));
    forms.push_back(MPoly::constant(m, FieldElement(1)));
    std::vector<MPoly> nfs;
    std::vector<Monomial> monos;
    for (const auto& f : forms) {
        nfs.push_back(normal_form(f, gb));
        for (const auto& t : nfs.back().terms())
            if (std::find(monos.begin(), monos.end(), t.m) == monos.end()) monos.push_back(t.m);
    }
    Matrix a(monos.size(), Row(forms.size()));
    for (std::size_t col = 0; col < nfs.size(); ++col)
        for (const auto& t : nfs[col].terms()) {
            auto row = std::find(monos.begin(), monos.end(), t.m) - monos.begin();
            a[row][col] = t.c;
        }
    auto kernel = nullspace(std::move(a), forms.size());
    // echelonize the relations themselves
    Matrix rel(kernel.begin(), kernel.end());
    rref(rel);
    std::vector<MPoly> out;
    for (const auto& r : rel) {
        MPoly p(m);
        for (std::size_t k = 0; k < forms.size(); ++k)
            if (!r[k].is_zero()) p += r[k] * forms[k];
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace hc
