#pragma once

// Parametric Weil descent: t = t0 + a*t1 + ... + a^(n-1)*t_{n-1} substituted
// into a parametrization over L(a), split into a-coordinates over L.

#include <vector>

#include "hc/groebner.hpp"
#include "hc/ratfunc.hpp"

namespace hc {

/// A curve parametrization (f_1/g, ..., f_N/g) in one variable.
struct Parametrization {
    std::vector<UPoly> nums;
    UPoly den;

    /// Common denominator = monic lcm of the reduced component denominators.
    static Parametrization from_components(const std::vector<RatFunc>& comps);
    std::vector<RatFunc> components() const;
    /// Smallest field level holding every coefficient.
    FieldPtr field() const;
};

/// Res_x(M(x), f with the top generator replaced by x), over the base of `top`.
MPoly norm(const MPoly& f, const FieldPtr& top);

/// The a-power coordinates of num/den: sum_i a^i components[i] / delta.
struct Decomposition {
    std::vector<MPoly> components;
    MPoly delta;
};

Decomposition alpha_decompose(const MPoly& num, const MPoly& den, const FieldPtr& top);

/// F[i][j]: coordinate i of component j, all over the single delta.
struct DescentResult {
    std::vector<std::vector<MPoly>> F;
    MPoly delta;
};

/// t0 + a*t1 + ... as a polynomial over `top` in n = top->degree() variables.
MPoly descent_argument(const FieldPtr& top);

DescentResult weil_substitute(const Parametrization& phi, const FieldPtr& top);

struct Witness {
    Ideal ideal;  // saturate((F_ij : i >= 1), delta)
    DescentResult descent;
};

Witness witness_ideal(const Parametrization& phi, const FieldPtr& top, const GroebnerOptions& options = {});

}  // namespace hc
