#pragma once

// Exact scalars and the elementary number theory used by the conic generators.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace hc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form (den > 0, gcd 1). Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& z);
/// `p/q` with q > 0, or just `p` when q == 1.
std::string to_string(const Rational& q);

struct Congruence {
    Integer remainder;
    Integer modulus;
};

struct CrtSolution {
    Integer value;    // smallest nonnegative solution
    Integer modulus;  // product of the moduli
};

/// Solves x = r_i mod m_i for pairwise coprime moduli m_i > 1.
CrtSolution crt_solve(const std::vector<Congruence>& congruences);

/// Exact primality: deterministic Miller-Rabin below 3.3e24, trial division above.
bool is_prime(const Integer& n);

/// Euler criterion for an odd prime p. Throws when p divides a.
bool is_quadratic_residue(const Integer& a, const Integer& p);

/// Multiplicative inverse of a modulo m (m > 1, gcd(a, m) = 1).
Integer inverse_mod(const Integer& a, const Integer& m);

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// The squarefree integer d with q = d * (rational square), sign preserved.
Integer squarefree_part(const Rational& q);

bool rational_is_square(const Rational& q);

}  // namespace hc
