#include "hc/quadfields.hpp"

#include "hc/error.hpp"

namespace hc {

namespace {

Integer mod(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
}

bool usable_prime(const Integer& p, const Integer& a, const Integer& b) {
    return mod(a * b, p) != 0 && a + b * p * p != 0;
}

// e = b / (a + b*n^2) mod p
Integer ratio_mod(const Integer& a, const Integer& b, const Integer& n, const Integer& p) {
    return mod(b * inverse_mod(mod(a + b * n * n, p), p), p);
}

}  // namespace

Integer nonsquare_witness(const Integer& e, const Integer& p) {
    if (mod(e, p) == 0) throw input_error("nonsquare witness needs e != 0 mod p");
    for (Integer n = 1; n < p; ++n) {
        Integer v = mod(1 + e * n * n, p);
        if (v != 0 && !is_quadratic_residue(v, p)) return n;
    }
    throw internal_error("no nonsquare of the form 1 + e*n^2 mod " + to_string(p));
}

std::vector<Integer> prime_set(const Integer& a, const Integer& b, std::size_t k, std::size_t search_cap) {
    if (a == 0 || b == 0) throw input_error("conic coefficients must be nonzero");
    std::vector<Integer> out;
    std::vector<Congruence> classes{{1, 4}};
    for (std::size_t i = 0; i < k; ++i) {
        CrtSolution cls = crt_solve(classes);
        Integer p = cls.value;
        std::size_t steps = 0;
        while (!(p > 1 && is_prime(p) && usable_prime(p, a, b))) {
            p += cls.modulus;
            if (++steps > search_cap) throw budget_error("prime search exceeded");
        }
        out.push_back(p);
        classes.push_back({nonsquare_witness(ratio_mod(a, b, p, p), p), p});
    }
    return out;
}

std::vector<Integer> crt_set(const Integer& a, const Integer& b, std::size_t k) {
    if (a == 0 || b == 0) throw input_error("conic coefficients must be nonzero");
    std::vector<Integer> moduli;
    for (Integer p = 5; moduli.size() < k; p += 4)
        if (is_prime(p) && usable_prime(p, a, b)) moduli.push_back(p);
    std::vector<Integer> out;
    std::vector<Congruence> classes;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Congruence> system = classes;
        system.push_back({0, moduli[i]});
        // the first element is the modulus itself rather than 0
        Integer n = i == 0 ? moduli[0] : crt_solve(system).value;
        out.push_back(n);
        classes.push_back({nonsquare_witness(ratio_mod(a, b, n, moduli[i]), moduli[i]), moduli[i]});
    }
    return out;
}

std::vector<FieldDescriptor> parametrization_fields(const Integer& a, const Integer& b, const Integer& c,
                                                    const std::vector<Integer>& s) {
    if (a == 0 || b == 0 || c == 0) throw input_error("conic coefficients must be nonzero");
    std::vector<FieldDescriptor> out;
    for (const auto& n : s) {
        Integer q = a + b * n * n;
        if (q == 0) throw input_error("a + b*n^2 = 0 for n = " + to_string(n));
        Rational radicand = make_rational(-c, q);
        out.push_back({n, radicand, squarefree_part(radicand)});
    }
    return out;
}

bool verify_pairwise_distinct(const Integer& a, const Integer& b, const std::vector<Integer>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Integer p = a + b * s[i] * s[i], q = a + b * s[j] * s[j];
            if (p == 0 || q == 0) throw input_error("a + b*n^2 = 0 on the set");
            if (rational_is_square(make_rational(p, q))) return false;
        }
    return true;
}

}  // namespace hc
