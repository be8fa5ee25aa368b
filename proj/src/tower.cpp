#include "hc/tower.hpp"

#include <algorithm>

#include "hc/error.hpp"
#include "hc/linalg.hpp"
#include "hc/solve.hpp"
#include "hc/text.hpp"

namespace hc {

namespace {

// ---- rational roots by Sturm isolation -------------------------------------

using QPoly = std::vector<Rational>;  // lowest degree first, trimmed

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Rational eval(const QPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly rem(QPoly a, const QPoly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

QPoly qgcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * p[k]);
    return d;
}

QPoly exact_quotient(QPoly a, const QPoly& b) {
    QPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
    }
    return q;
}

struct Sturm {
    std::vector<QPoly> chain;

    explicit Sturm(const QPoly& f) {
        chain.push_back(f);
        chain.push_back(derivative(f));
        while (chain.back().size() > 1) {
            QPoly r = rem(chain[chain.size() - 2], chain.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            chain.push_back(std::move(r));
        }
    }
    int variations(const Rational& x) const {
        int count = 0, last = 0;
        for (const auto& p : chain) {
            int s = sgn(eval(p, x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }
};

// The rational with smallest denominator in [lo, hi], lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
    if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational frac = simplest_between(1 / (hi - fl), 1 / (lo - fl));
    return Rational(fl) + 1 / frac;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& f) {
    if (f.is_zero()) throw input_error("rational roots of the zero polynomial");
    QPoly p;
    for (const auto& c : f.coeffs()) {
        FieldElement low = lower(c);
        if (!low.is_rational_constant()) throw internal_error("rational_roots needs rational coefficients");
        p.push_back(low.rational());
    }
    std::vector<Rational> roots;
    if (p.size() == 1) return roots;
    // squarefree part with integral coefficients
    QPoly g = qgcd(p, derivative(p));
    if (g.size() > 1) p = exact_quotient(p, g);
    Integer den = 1;
    for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Integer content = 0;
    for (auto& c : p) {
        c *= den;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
    }
    for (auto& c : p) c /= content;
    Integer lead = abs(p.back().get_num());

    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, Rational(abs(p[i] / p.back())));
    bound += 1;
    // two distinct rationals with denominators dividing lead are 1/lead^2 apart
    const Rational width = Rational(1) / Rational(lead * lead * 2);

    Sturm s(p);
    struct Interval {
        Rational lo, hi;
        int count;  // roots in (lo, hi]
    };
    std::vector<Interval> work{{-bound, bound, s.variations(-bound) - s.variations(bound)}};
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        if (iv.count == 0) continue;
        if (iv.count == 1 && iv.hi - iv.lo < width) {
            if (sgn(eval(p, iv.hi)) == 0) {
                roots.push_back(iv.hi);
                continue;
            }
            Rational c = simplest_between(iv.lo, iv.hi);
            if (sgn(eval(p, c)) == 0) roots.push_back(c);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        int left = s.variations(iv.lo) - s.variations(mid);
        work.push_back({mid, iv.hi, iv.count - left});
        work.push_back({iv.lo, mid, left});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

FieldElement SubfieldEmbedding::embed(const FieldElement& y) const {
    if (!gamma_field) {
        FieldElement low = lower(y);
        if (!low.is_rational_constant()) throw internal_error("element is not rational");
        return lift(low, alpha_field);
    }
    auto c = flatten(y, gamma_field);
    FieldElement acc = lift(FieldElement(), alpha_field);
    FieldElement power = lift(FieldElement(1), alpha_field);
    for (const auto& q : c) {
        acc += FieldElement(q) * power;
        power *= gamma_in_alpha;
    }
    return acc;
}

UPoly min_poly_over_Q(const FieldElement& x) {
    const FieldPtr field = x.field();
    if (!field) return UPoly{-x, 1};
    const unsigned n = absolute_degree(field);
    std::vector<std::vector<Rational>> powers{flatten(FieldElement(1), field)};
    FieldElement p = lift(FieldElement(1), field);
    for (unsigned k = 1; k <= n; ++k) {
        p *= x;
        auto target = flatten(p, field);
        Matrix m(n, Row(k));
        Row b(n);
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < k; ++j) m[i][j] = FieldElement(powers[j][i]);
            b[i] = FieldElement(target[i]);
        }
        if (auto sol = solve(m, b, k)) {
            std::vector<FieldElement> c(k + 1);
            for (unsigned j = 0; j < k; ++j) c[j] = -(*sol)[j];
            c[k] = FieldElement(1);
            return UPoly(std::move(c));
        }
        powers.push_back(std::move(target));
    }
    throw internal_error("minimal polynomial degree exceeds the field degree");
}

SubfieldEmbedding make_embedding(const FieldPtr& alpha_field, const FieldElement& gamma, const std::string& name) {
    SubfieldEmbedding emb;
    emb.alpha_field = alpha_field;
    UPoly m = min_poly_over_Q(gamma);
    if (m.degree() == 1) {
        emb.gamma_minpoly = UPoly{0, 1};
        emb.gamma_in_alpha = lift(FieldElement(), alpha_field);
        return emb;
    }
    emb.gamma_minpoly = m;
    emb.gamma_in_alpha = lift(gamma, alpha_field);
    emb.gamma_field = NumberField::make(nullptr, m.coeffs(), name);
    return emb;
}

std::optional<std::vector<Rational>> membership(const FieldElement& x, const SubfieldEmbedding& emb) {
    const FieldPtr& field = emb.alpha_field;
    const unsigned n = absolute_degree(field), r = emb.degree();
    Matrix m(n, Row(r));
    FieldElement power = lift(FieldElement(1), field);
    for (unsigned j = 0; j < r; ++j) {
        auto col = flatten(power, field);
        for (unsigned i = 0; i < n; ++i) m[i][j] = FieldElement(col[i]);
        power *= emb.gamma_in_alpha;
    }
    auto target = flatten(x, field);
    Row b(target.begin(), target.end());
    auto sol = solve(m, b, r);
    if (!sol) return std::nullopt;
    std::vector<Rational> out;
    for (const auto& e : *sol) out.push_back(e.rational());
    return out;
}

std::optional<FieldElement> to_subfield(const FieldElement& x, const SubfieldEmbedding& emb) {
    auto c = membership(x, emb);
    if (!c) return std::nullopt;
    if (!emb.gamma_field) return FieldElement((*c)[0]);
    return lower(unflatten(*c, emb.gamma_field));
}

namespace {

// Rescales gamma by a rational so its minimal polynomial is integral with
// no integer k > 1 such that gamma/k is still integral.
FieldElement normalize_generator(const FieldElement& gamma) {
    UPoly m = min_poly_over_Q(gamma);
    const int r = m.degree();
    if (r < 2) return gamma;
    Integer d = 1;
    for (const auto& c : m.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.rational().get_den_mpz_t());
    // coefficients of the minimal polynomial of d*gamma
    std::vector<Integer> e(r);
    Integer scale = d;
    for (int i = r - 1; i >= 0; --i) {
        Rational v = m.coeffs()[i].rational() * Rational(scale);
        e[i] = v.get_num();
        scale *= d;
    }
    // primes of k divide every nonzero e_i; factor their gcd, or only its small
    // primes when the gcd itself is large
    Integer g = 0;
    for (const auto& x : e) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<Integer> primes;
    if (mpz_sizeinbase(g.get_mpz_t(), 2) <= 64) {
        for (const auto& [p, mult] : factorize(g)) primes.push_back(p);
    } else {
        for (long p = 2; p < 10000; ++p)
            if (is_prime(Integer(p)) && mpz_divisible_ui_p(g.get_mpz_t(), static_cast<unsigned long>(p))) primes.emplace_back(p);
    }
    Integer k = 1;
    for (const auto& p : primes) {
        unsigned best = ~0u;
        for (int i = 0; i < r; ++i) {
            if (e[i] == 0) continue;
            unsigned v = 0;
            Integer x = e[i];
            while (x % p == 0) {
                x /= p;
                ++v;
            }
            best = std::min(best, v / static_cast<unsigned>(r - i));
        }
        for (unsigned j = 0; j < best; ++j) k *= p;
    }
    return FieldElement(make_rational(d, k)) * gamma;
}

bool generates_all(const FieldElement& gamma, const std::vector<FieldElement>& gens, const FieldPtr& field,
                   const std::string& name, SubfieldEmbedding& out) {
    SubfieldEmbedding emb = make_embedding(field, gamma, name);
    for (const auto& g : gens)
        if (!membership(g, emb)) return false;
    out = std::move(emb);
    return true;
}

}  // namespace

SubfieldEmbedding primitive_element(const std::vector<FieldElement>& gens, const FieldPtr& field, unsigned cap,
                                    const std::string& name) {
    if (gens.empty()) throw input_error("primitive element of an empty generator list");
    SubfieldEmbedding found;
    auto accept = [&](const FieldElement& candidate) {
        return generates_all(lift(candidate, field), gens, field, name, found);
    };
    auto finish = [&] {
        if (!found.gamma_field) return found;
        return make_embedding(field, normalize_generator(found.gamma_in_alpha), name);
    };
    for (const auto& g : gens)
        if (accept(g)) return finish();
    for (unsigned l = 1; l <= cap; ++l)
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (accept(gens[i] + FieldElement(static_cast<long>(l)) * gens[j])) return finish();
    // more than two generators needed: grow a running primitive element
    FieldElement s = gens[0];
    for (std::size_t i = 1; i < gens.size(); ++i) {
        std::vector<FieldElement> pair{s, gens[i]};
        bool ok = false;
        for (unsigned l = 0; l <= cap && !ok; ++l) {
            FieldElement c = s + FieldElement(static_cast<long>(l)) * gens[i];
            SubfieldEmbedding e;
            if (generates_all(lift(c, field), pair, field, name, e)) {
                s = c;
                ok = true;
            }
        }
        if (!ok) throw budget_error("primitive element search exceeded");
    }
    if (!accept(s)) throw internal_error("running primitive element does not generate");
    return finish();
}

namespace {

// Columns g^j a^k (j < r, k < m) flattened over Q, ordered k-major.
Matrix tower_basis_matrix(const SubfieldEmbedding& emb, unsigned m) {
    const FieldPtr& field = emb.alpha_field;
    const unsigned n = absolute_degree(field), r = emb.degree();
    Matrix mat(n, Row(r * m));
    const FieldElement a = FieldElement::generator(field);
    FieldElement ak = lift(FieldElement(1), field);
    for (unsigned k = 0; k < m; ++k) {
        FieldElement e = ak;
        for (unsigned j = 0; j < r; ++j) {
            auto col = flatten(e, field);
            for (unsigned i = 0; i < n; ++i) mat[i][k * r + j] = FieldElement(col[i]);
            e *= emb.gamma_in_alpha;
        }
        ak *= a;
    }
    return mat;
}

// Coordinates of x over the basis of tower_basis_matrix, grouped into
// elements of the gamma field per power of a.
std::vector<FieldElement> tower_coords(const FieldElement& x, const SubfieldEmbedding& emb, const Matrix& basis,
                                       unsigned m) {
    const unsigned r = emb.degree();
    auto target = flatten(x, emb.alpha_field);
    Row b(target.begin(), target.end());
    auto sol = solve(basis, b, r * m);
    if (!sol) throw internal_error("element is not expressible in the tower basis");
    std::vector<FieldElement> out;
    for (unsigned k = 0; k < m; ++k) {
        std::vector<Rational> c;
        for (unsigned j = 0; j < r; ++j) c.push_back((*sol)[k * r + j].rational());
        out.push_back(emb.gamma_field ? unflatten(c, emb.gamma_field) : FieldElement(c[0]));
    }
    return out;
}

}  // namespace

UPoly relative_min_poly(const SubfieldEmbedding& emb) {
    const unsigned n = absolute_degree(emb.alpha_field), r = emb.degree();
    if (n % r != 0) throw internal_error("subfield degree does not divide the field degree");
    const unsigned m = n / r;
    Matrix basis = tower_basis_matrix(emb, m);
    FieldElement am = FieldElement::generator(emb.alpha_field).pow(m);
    auto c = tower_coords(am, emb, basis, m);
    std::vector<FieldElement> coeffs;
    for (auto& x : c) coeffs.push_back(-x);
    coeffs.push_back(FieldElement(1));
    return UPoly(std::move(coeffs));
}

Tower make_tower(const SubfieldEmbedding& emb, const std::string& alpha_name) {
    if (!emb.gamma_field) throw internal_error("tower over Q requested");
    UPoly p = relative_min_poly(emb);
    if (p.degree() < 2) throw internal_error("tower of relative degree 1 requested");
    std::vector<FieldElement> c;
    for (const auto& x : p.coeffs()) c.push_back(lift(x, emb.gamma_field));
    return {emb, NumberField::make(emb.gamma_field, std::move(c), alpha_name)};
}

FieldElement Tower::to_tower(const FieldElement& x) const {
    const unsigned m = field->degree();
    Matrix basis = tower_basis_matrix(emb, m);
    return FieldElement(field, tower_coords(x, emb, basis, m));
}

FieldElement Tower::from_tower(const FieldElement& y) const {
    FieldElement z = lift(y, field);
    const FieldElement a = FieldElement::generator(emb.alpha_field);
    FieldElement acc = lift(FieldElement(), emb.alpha_field);
    FieldElement ak = lift(FieldElement(1), emb.alpha_field);
    for (const auto& c : z.coords()) {
        acc += emb.embed(c) * ak;
        ak *= a;
    }
    return acc;
}

std::vector<MPoly> restrict_scalars(const MPoly& f, const FieldPtr& field) {
    const unsigned n = absolute_degree(field);
    std::vector<std::vector<Term>> parts(n);
    for (const auto& t : f.terms()) {
        auto c = flatten(t.c, field);
        for (unsigned i = 0; i < n; ++i)
            if (sgn(c[i]) != 0) parts[i].push_back({t.m, FieldElement(c[i])});
    }
    std::vector<MPoly> out;
    for (auto& p : parts) out.push_back(MPoly::from_terms(f.arity(), std::move(p)));
    return out;
}

namespace {

// sum_k u_k b_k over the Q-basis of field, with u_k variables offset..offset+n-1.
MPoly generic_element(const FieldPtr& field, unsigned arity, unsigned offset) {
    auto basis = q_basis(field);
    MPoly acc(arity);
    for (unsigned k = 0; k < basis.size(); ++k) acc += basis[k] * MPoly::variable(arity, offset + k);
    return acc;
}

}  // namespace

std::vector<FieldElement> roots_in_field(const UPoly& f, const FieldPtr& field) {
    if (f.is_zero()) throw input_error("roots of the zero polynomial");
    std::vector<FieldElement> out;
    if (f.degree() == 0) return out;
    if (!is_subfield_level(f.field(), field)) throw internal_error("polynomial coefficients outside the target field");
    if (f.degree() == 1) {
        out.push_back(lower(-f.coeff(0) / f.coeff(1)));
        return out;
    }
    if (!field) {
        for (auto& r : rational_roots(f)) out.emplace_back(r);
        return out;
    }
    const unsigned n = absolute_degree(field);
    if (n > kMaxVars) throw input_error("field degree too large for root finding");
    MPoly c = generic_element(field, n, 0);
    Ideal system{n, restrict_scalars(compose(f, c), field)};
    for (const auto& pt : solutions_in_field(system, nullptr)) {
        std::vector<Rational> q;
        for (const auto& e : pt) q.push_back(e.rational());
        out.push_back(lower(unflatten(q, field)));
    }
    std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& b) { return canonical_compare(a, b) < 0; });
    return out;
}

std::optional<UPoly> find_factor(const UPoly& f, const FieldPtr& base) {
    const int deg = f.degree();
    if (deg < 2) return std::nullopt;
    auto roots = roots_in_field(f, base);
    if (!roots.empty()) return UPoly{-roots.back(), 1};
    const unsigned n = absolute_degree(base);
    for (int d = 2; 2 * d <= deg; ++d) {
        const unsigned arity = static_cast<unsigned>(d) * n;
        if (arity > kMaxVars) throw input_error("polynomial too large to test for irreducibility");
        // g = x^d + sum_j c_j x^j with generic c_j; remainder of f mod g must vanish
        std::vector<MPoly> g;
        for (int j = 0; j < d; ++j) g.push_back(generic_element(base, arity, static_cast<unsigned>(j) * n));
        std::vector<MPoly> r;
        for (const auto& c : f.coeffs()) r.push_back(MPoly::constant(arity, c));
        for (int k = deg; k >= d; --k) {
            MPoly top = r[k];
            for (int j = 0; j < d; ++j) r[k - d + j] -= top * g[j];
            r.pop_back();
        }
        std::vector<MPoly> eqs;
        for (const auto& rc : r) {
            auto parts = restrict_scalars(rc, base);
            eqs.insert(eqs.end(), parts.begin(), parts.end());
        }
        auto sols = solutions_in_field({arity, eqs}, nullptr);
        if (sols.empty()) continue;
        std::vector<FieldElement> coeffs;
        for (int j = 0; j < d; ++j) {
            std::vector<Rational> q;
            for (unsigned k = 0; k < n; ++k) q.push_back(sols[0][j * n + k].rational());
            coeffs.push_back(lower(unflatten(q, base)));
        }
        coeffs.emplace_back(1);
        return UPoly(std::move(coeffs));
    }
    return std::nullopt;
}

FieldPtr make_extension(FieldPtr base, std::vector<FieldElement> minpoly, std::string name) {
    FieldPtr f = NumberField::make(base, minpoly, name);
    if (auto factor = find_factor(UPoly(minpoly), base))
        throw input_error("not irreducible: factor " + render(*factor, "x"));
    return f;
}

}  // namespace hc
