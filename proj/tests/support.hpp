#pragma once

// Shared fixtures for the unit tests: the fields used throughout and random
// generators for property checks.

#include <random>
#include <vector>

#include "hc/field.hpp"
#include "hc/mpoly.hpp"
#include "hc/upoly.hpp"

namespace hc::testing {

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

inline std::vector<FieldElement> rationals(std::initializer_list<Rational> v) {
    return {v.begin(), v.end()};
}

/// Q(i), i^2 + 1 = 0.
inline FieldPtr gaussian_field() {
    static FieldPtr f = NumberField::make(nullptr, rationals({q(1), q(0), q(1)}), "a");
    return f;
}

/// Q(a), a^4 - 4a^3 + 12a^2 - 16a + 8 = 0.
inline FieldPtr quartic_field() {
    static FieldPtr f = NumberField::make(nullptr, rationals({q(8), q(-16), q(12), q(-4), q(1)}), "a");
    return f;
}

/// Q(g), g^2 + 6g + 10 = 0.
inline FieldPtr gamma_field() {
    static FieldPtr f = NumberField::make(nullptr, rationals({q(10), q(6), q(1)}), "g");
    return f;
}

inline FieldElement elem(const FieldPtr& f, std::initializer_list<Rational> coords) {
    std::vector<Rational> v(coords);
    v.resize(absolute_degree(f));
    return unflatten(v, f);
}

struct Random {
    std::mt19937_64 rng;
    explicit Random(unsigned seed) : rng(seed) {}

    long integer(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); }
    Rational rational(long range = 9) { return make_rational(integer(-range, range), integer(1, 4)); }

    FieldElement element(const FieldPtr& f, long range = 9) {
        std::vector<Rational> v(absolute_degree(f));
        for (auto& x : v) x = rational(range);
        return unflatten(v, f);
    }
    FieldElement nonzero_element(const FieldPtr& f) {
        for (;;) {
            FieldElement e = element(f);
            if (!e.is_zero()) return e;
        }
    }
    UPoly upoly(const FieldPtr& f, int max_degree) {
        std::vector<FieldElement> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
        for (auto& x : c) x = element(f, 5);
        return UPoly(std::move(c));
    }
    MPoly mpoly(const FieldPtr& f, unsigned arity, int max_degree, int terms) {
        std::vector<Term> t;
        for (int k = 0; k < terms; ++k) {
            Monomial m;
            int budget = static_cast<int>(integer(0, max_degree));
            for (int d = 0; d < budget; ++d) ++m.e[static_cast<unsigned>(integer(0, arity - 1))];
            t.push_back({m, element(f, 5)});
        }
        return MPoly::from_terms(arity, std::move(t));
    }
};

}  // namespace hc::testing
