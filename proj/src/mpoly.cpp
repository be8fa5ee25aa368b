#include "hc/mpoly.hpp"

#include <algorithm>

#include "hc/determinant.hpp"
#include "hc/error.hpp"

namespace hc {

bool grlex_greater(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (unsigned i = 0; i < kMaxVars; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

MPoly MPoly::constant(unsigned arity, const FieldElement& c) { return term(arity, Monomial{}, c); }

MPoly MPoly::variable(unsigned arity, unsigned index) {
    if (index >= arity) throw internal_error("variable index out of range");
    Monomial m;
    m.e[index] = 1;
    return term(arity, m, FieldElement(1));
}

MPoly MPoly::term(unsigned arity, const Monomial& m, const FieldElement& c) {
    MPoly p(arity);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

MPoly MPoly::from_terms(unsigned arity, std::vector<Term> terms) {
    if (arity > kMaxVars) throw input_error("too many variables");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.m, b.m); });
    MPoly p(arity);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
        } else {
            if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
    return p;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.degree()));
    return d;
}

int MPoly::degree_in(unsigned var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.e[var]));
    return d;
}

FieldElement MPoly::coeff(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.m == m) return t.c;
    return {};
}

FieldElement MPoly::constant_term() const { return coeff(Monomial{}); }

FieldPtr MPoly::field() const {
    FieldPtr f;
    for (const auto& t : terms_) f = common_field(f, t.c.field());
    return f;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && grlex_greater(a->m, b->m))) {
            out.push_back(std::move(*a++));
        } else if (a == ae || grlex_greater(b->m, a->m)) {
            out.push_back(*b++);
        } else {
            FieldElement c = a->c + b->c;
            if (!c.is_zero()) out.push_back({a->m, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    arity_ = std::max(arity_, o.arity_);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) prod.push_back({x.m * y.m, x.c * y.c});
    return MPoly::from_terms(std::max(a.arity_, b.arity_), std::move(prod));
}

MPoly operator*(const FieldElement& c, const MPoly& p) {
    if (c.is_zero()) return MPoly(p.arity_);
    MPoly r = p;
    for (auto& t : r.terms_) t.c = c * t.c;
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    }
    return true;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly result = constant(arity_, FieldElement(1));
    MPoly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

MPoly MPoly::widen(unsigned arity) const {
    if (arity < arity_ || arity > kMaxVars) throw internal_error("invalid widening");
    MPoly r = *this;
    r.arity_ = arity;
    return r;
}

std::pair<MPoly, MPoly> divrem(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw input_error("polynomial division by zero");
    const unsigned arity = std::max(f.arity(), g.arity());
    const Term& lead = g.terms().front();
    const FieldElement inv = lead.c.inverse();
    MPoly q(arity), r(arity), p = f;
    while (!p.is_zero()) {
        const Term& t = p.terms().front();
        if (lead.m.divides(t.m)) {
            MPoly step = MPoly::term(arity, t.m / lead.m, t.c * inv);
            q += step;
            p -= step * g;
        } else {
            MPoly head = MPoly::term(arity, t.m, t.c);
            r += head;
            p -= head;
        }
    }
    return {q, r};
}

MPoly exact_divide(const MPoly& f, const MPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw input_error("not divisible");
    return q;
}

MPoly resultant(const std::vector<MPoly>& f, const std::vector<MPoly>& g) {
    if (f.empty() || g.empty() || f.back().is_zero() || g.back().is_zero())
        throw input_error("resultant of a zero polynomial");
    unsigned arity = 0;
    for (const auto& c : f) arity = std::max(arity, c.arity());
    for (const auto& c : g) arity = std::max(arity, c.arity());
    std::vector<MPoly> rf, rg;
    for (const auto& c : f) rf.push_back(c.widen(arity));
    for (const auto& c : g) rg.push_back(c.widen(arity));
    MPoly r = sylvester_resultant(
        rf, rg, MPoly::constant(arity, FieldElement(1)), [](const MPoly& a, const MPoly& b) { return exact_divide(a, b); },
        [](const MPoly& a) { return a.is_zero(); });
    return r.widen(arity);
}

MPoly substitute(const MPoly& f, const std::vector<MPoly>& images) {
    if (images.size() != f.arity()) throw internal_error("substitution arity mismatch");
    unsigned arity = 0;
    for (const auto& m : images) arity = std::max(arity, m.arity());
    // cache powers of each image
    std::vector<std::vector<MPoly>> powers(images.size());
    auto power = [&](unsigned var, unsigned k) -> const MPoly& {
        auto& pw = powers[var];
        if (pw.empty()) pw.push_back(MPoly::constant(arity, FieldElement(1)));
        while (pw.size() <= k) pw.push_back(pw.back() * images[var]);
        return pw[k];
    };
    MPoly acc(arity);
    for (const auto& t : f.terms()) {
        MPoly term = MPoly::constant(arity, t.c);
        for (unsigned v = 0; v < f.arity(); ++v) {
            if (t.m.e[v]) term = term * power(v, t.m.e[v]);
        }
        acc += term;
    }
    return acc.widen(arity);
}

MPoly substitute_value(const MPoly& f, unsigned var, const FieldElement& value) {
    std::vector<FieldElement> powers{FieldElement(1)};
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        unsigned k = t.m.e[var];
        while (powers.size() <= k) powers.push_back(powers.back() * value);
        Monomial m = t.m;
        m.e[var] = 0;
        out.push_back({m, t.c * powers[k]});
    }
    return MPoly::from_terms(f.arity(), std::move(out));
}

MPoly compose(const UPoly& f, const MPoly& inner) {
    MPoly acc(inner.arity());
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + MPoly::constant(inner.arity(), *it);
    return acc;
}

MPoly homogenize(const MPoly& f) {
    const unsigned h = f.arity();
    if (h + 1 > kMaxVars) throw input_error("too many variables");
    const int d = f.total_degree();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        Monomial m = t.m;
        m.e[h] = static_cast<std::uint16_t>(d - static_cast<int>(t.m.degree()));
        out.push_back({m, t.c});
    }
    return MPoly::from_terms(h + 1, std::move(out));
}

MPoly dehomogenize(const MPoly& f, unsigned index) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        Monomial m;
        unsigned j = 0;
        for (unsigned i = 0; i < f.arity(); ++i) {
            if (i != index) m.e[j++] = t.m.e[i];
        }
        out.push_back({m, t.c});
    }
    return MPoly::from_terms(f.arity() - 1, std::move(out));
}

MPoly leading_form(const MPoly& f) {
    const int d = f.total_degree();
    std::vector<Term> out;
    for (const auto& t : f.terms())
        if (static_cast<int>(t.m.degree()) == d) out.push_back(t);
    return MPoly::from_terms(f.arity(), std::move(out));
}

UPoly to_upoly(const MPoly& f, unsigned var) {
    std::vector<FieldElement> c;
    for (const auto& t : f.terms()) {
        if (t.m.degree() != t.m.e[var]) throw internal_error("polynomial is not univariate in the requested variable");
        unsigned k = t.m.e[var];
        if (c.size() <= k) c.resize(k + 1);
        c[k] += t.c;
    }
    return UPoly(std::move(c));
}

MPoly from_upoly(const UPoly& f, unsigned arity, unsigned var) {
    std::vector<Term> out;
    for (unsigned k = 0; k < f.coeffs().size(); ++k) {
        Monomial m;
        m.e[var] = static_cast<std::uint16_t>(k);
        out.push_back({m, f.coeffs()[k]});
    }
    return MPoly::from_terms(arity, std::move(out));
}

}  // namespace hc
