#pragma once

// Infinitely many distinct quadratic fields of parametrization for a conic
// a*x^2 + b*y^2 + c = 0 without rational points: the line y = n*x through the
// origin meets it over Q(sqrt(-c / (a + b*n^2))).

#include <cstddef>
#include <vector>

#include "hc/arith.hpp"

namespace hc {

/// Smallest n >= 1 with 1 + e*n^2 a non-residue mod p (p prime, p = 1 mod 4, p !| e).
Integer nonsquare_witness(const Integer& e, const Integer& p);

/// The first k primes of the prime construction.
std::vector<Integer> prime_set(const Integer& a, const Integer& b, std::size_t k, std::size_t search_cap = 10000000);

/// The first k integers of the CRT construction.
std::vector<Integer> crt_set(const Integer& a, const Integer& b, std::size_t k);

struct FieldDescriptor {
    Integer n;
    Rational radicand;  // -c / (a + b*n^2)
    Integer canonical;  // squarefree part of the radicand
};

std::vector<FieldDescriptor> parametrization_fields(const Integer& a, const Integer& b, const Integer& c,
                                                    const std::vector<Integer>& s);

/// No ratio (a + b*p^2)/(a + b*q^2) over distinct p, q in s is a rational square.
bool verify_pairwise_distinct(const Integer& a, const Integer& b, const std::vector<Integer>& s);

}  // namespace hc
