#include "hc/arith.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "hc/error.hpp"

namespace hc {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw input_error("division by zero");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer mod_nonneg(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

Integer pow_mod(const Integer& base, const Integer& exp, const Integer& mod) {
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// Witness set {2, ..., 37} is complete below this bound.
const Integer& miller_rabin_bound() {
    static const Integer bound("318665857834031151167461");
    return bound;
}

bool miller_rabin(const Integer& n) {
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        Integer x = pow_mod(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool trial_division_prime(const Integer& n) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    for (Integer p = 3; p <= root; p += 2) {
        if (n % p == 0) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_rho(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned r = 1;
        const unsigned m = 64;
        auto f = [&](const Integer& v) { return (v * v + c) % n; };
        do {
            x = y;
            for (unsigned i = 0; i < r; ++i) y = f(y);
            unsigned k = 0;
            do {
                ys = y;
                for (unsigned i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

CrtSolution crt_solve(const std::vector<Congruence>& congruences) {
    Integer x = 0, m = 1;
    for (const auto& [r, mi] : congruences) {
        if (mi <= 1) throw input_error("modulus must be > 1");
        Integer g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t());
        if (g != 1) throw input_error("moduli not coprime");
        // x + m*k = r (mod mi)
        Integer k = mod_nonneg((r - x) * inverse_mod(m, mi), mi);
        x += m * k;
        m *= mi;
        x = mod_nonneg(x, m);
    }
    return {x, m};
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    static constexpr std::array<unsigned, 12> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < miller_rabin_bound()) return miller_rabin(n);
    return trial_division_prime(n);
}

bool is_quadratic_residue(const Integer& a, const Integer& p) {
    Integer r = mod_nonneg(a, p);
    if (r == 0) throw input_error("quadratic residue test: p divides a");
    return pow_mod(r, (p - 1) / 2, p) == 1;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer inv;
    Integer r = mod_nonneg(a, m);
    if (mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t()) == 0)
        throw input_error("element not invertible modulo " + m.get_str());
    return inv;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    if (n == 0) throw input_error("cannot factor zero");
    Integer m = abs(n);
    std::map<Integer, unsigned> out;
    for (unsigned p = 2; p < 10000 && m > 1; ++p) {
        while (m % p == 0) {
            ++out[Integer(p)];
            m /= p;
        }
    }
    factor_into(m, out);
    return {out.begin(), out.end()};
}

Integer squarefree_part(const Rational& q) {
    if (q == 0) throw input_error("squarefree part of zero");
    // num/den = num*den / den^2
    Integer prod = q.get_num() * q.get_den();
    Integer d = sgn(prod) < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(prod)) {
        if (e % 2 == 1) d *= p;
    }
    return d;
}

bool rational_is_square(const Rational& q) {
    if (q < 0) return false;
    if (q == 0) return true;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

}  // namespace hc
