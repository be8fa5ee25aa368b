#pragma once

// Sparse multivariate polynomials with dense exponent vectors.
//
// Terms are stored sorted by graded-lex descending (t0 > t1 > ...), which is
// also the rendering order. Monomial orders used by the Groebner engine are
// applied there; MPoly itself only fixes this canonical storage order.

#include <array>
#include <cstdint>
#include <vector>

#include "hc/field.hpp"
#include "hc/upoly.hpp"

namespace hc {

inline constexpr unsigned kMaxVars = 12;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    unsigned degree() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool divides(const Monomial& o) const {
        for (unsigned i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    bool coprime(const Monomial& o) const {
        for (unsigned i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (unsigned i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
        return r;
    }
    /// Requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (unsigned i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (unsigned i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        return r;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical storage order: graded lex, true when a comes first (is larger).
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
    Monomial m;
    FieldElement c;
};

class MPoly {
   public:
    explicit MPoly(unsigned arity = 0) : arity_(arity) {}
    static MPoly constant(unsigned arity, const FieldElement& c);
    static MPoly variable(unsigned arity, unsigned index);
    static MPoly term(unsigned arity, const Monomial& m, const FieldElement& c);
    /// Sorts, merges equal monomials and drops zero coefficients.
    static MPoly from_terms(unsigned arity, std::vector<Term> terms);

    unsigned arity() const noexcept { return arity_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.degree() == 0); }
    /// -1 for zero.
    int total_degree() const;
    int degree_in(unsigned var) const;
    /// Coefficient of a monomial (zero when absent).
    FieldElement coeff(const Monomial& m) const;
    FieldElement constant_term() const;
    FieldPtr field() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const FieldElement& c, const MPoly& p);
    friend bool operator==(const MPoly& a, const MPoly& b);
    MPoly pow(unsigned k) const;

    /// Same polynomial viewed with more variables (new ones appended).
    MPoly widen(unsigned arity) const;

   private:
    unsigned arity_;
    std::vector<Term> terms_;
};

/// q with q*g = f; throws input_error("not divisible") otherwise.
MPoly exact_divide(const MPoly& f, const MPoly& g);
/// Multivariate division by a single divisor in the canonical order.
std::pair<MPoly, MPoly> divrem(const MPoly& f, const MPoly& g);

/// Sylvester resultant of two polynomials in an outer variable whose
/// coefficients (lowest degree first, nonzero leading) live in a polynomial ring.
MPoly resultant(const std::vector<MPoly>& f, const std::vector<MPoly>& g);

/// Replaces variable i by images[i] (images.size() == f.arity(), common arity).
MPoly substitute(const MPoly& f, const std::vector<MPoly>& images);
/// Substitutes a field value for one variable, keeping the arity.
MPoly substitute_value(const MPoly& f, unsigned var, const FieldElement& value);
/// Composition of a univariate polynomial with a multivariate one.
MPoly compose(const UPoly& f, const MPoly& inner);

/// Appends a homogenizing variable at index arity().
MPoly homogenize(const MPoly& f);
/// Sets variable `index` to 1 and removes it.
MPoly dehomogenize(const MPoly& f, unsigned index);
/// The top-degree homogeneous component.
MPoly leading_form(const MPoly& f);

/// Univariate view in `var` (arity must be 1 or all other exponents zero).
UPoly to_upoly(const MPoly& f, unsigned var = 0);
MPoly from_upoly(const UPoly& f, unsigned arity = 1, unsigned var = 0);

/// Coefficientwise image under a map on field elements.
template <class Fn>
MPoly map_coefficients(const MPoly& f, Fn&& fn) {
    std::vector<Term> t;
    t.reserve(f.terms().size());
    for (const auto& term : f.terms()) t.push_back({term.m, fn(term.c)});
    return MPoly::from_terms(f.arity(), std::move(t));
}

}  // namespace hc
