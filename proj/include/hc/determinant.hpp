#pragma once

// Fraction-free determinants and Sylvester resultants over an integral domain.

#include <cstddef>
#include <utility>
#include <vector>

namespace hc {

/// Bareiss elimination. `exact_div(a, b)` must return a/b when b divides a;
/// `is_zero` tests ring zero.
template <class R, class ExactDiv, class IsZero>
R bareiss_determinant(std::vector<std::vector<R>> m, const R& one, ExactDiv exact_div, IsZero is_zero) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    R prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return one - one;
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(v, prev);
            }
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return negate ? -det : det;
}

/// Sylvester matrix of f, g given lowest-degree-first coefficient lists with
/// nonzero leading entries.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const std::vector<R>& f, const std::vector<R>& g, const R& zero) {
    const std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
    std::vector<std::vector<R>> m(n, std::vector<R>(n, zero));
    for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t k = 0; k <= df; ++k) m[i][i + k] = f[df - k];
    for (std::size_t i = 0; i < df; ++i)
        for (std::size_t k = 0; k <= dg; ++k) m[dg + i][i + k] = g[dg - k];
    return m;
}

/// Res(f, g) for nonzero f, g. A constant argument c yields c^(deg of the other).
template <class R, class ExactDiv, class IsZero>
R sylvester_resultant(const std::vector<R>& f, const std::vector<R>& g, const R& one, ExactDiv exact_div,
                      IsZero is_zero) {
    auto power = [&](const R& c, std::size_t k) {
        R r = one;
        for (std::size_t i = 0; i < k; ++i) r = r * c;
        return r;
    };
    if (f.size() == 1) return power(f[0], g.size() - 1);
    if (g.size() == 1) return power(g[0], f.size() - 1);
    return bareiss_determinant(sylvester_matrix(f, g, one - one), one, exact_div, is_zero);
}

}  // namespace hc
