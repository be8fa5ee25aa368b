#pragma once

// Buchberger's algorithm over any field level, and the ideal operations built on it.

#include <cstddef>
#include <vector>

#include "hc/mpoly.hpp"

namespace hc {

struct MonomialOrder {
    enum class Kind { Lex, GrevLex, Block };
    Kind kind = Kind::GrevLex;
    /// Block orders: variables [0, block) form the eliminated block, grevlex
    /// inside each block.
    unsigned block = 0;

    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
    static MonomialOrder elimination(unsigned k) { return {Kind::Block, k}; }

    /// True when a > b.
    bool greater(const Monomial& a, const Monomial& b, unsigned arity) const;
    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct GroebnerOptions {
    std::size_t pair_budget = 100000;
};

struct Ideal {
    unsigned arity = 0;
    std::vector<MPoly> gens;
};

struct GroebnerBasis {
    unsigned arity = 0;
    MonomialOrder order;
    /// Reduced and monic, sorted by ascending leading monomial.
    std::vector<MPoly> basis;

    bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
    Ideal ideal() const { return {arity, basis}; }
};

Term leading_term(const MPoly& f, const MonomialOrder& order);

/// Reduced Groebner basis. Throws budget_error("groebner budget exceeded")
/// once more than options.pair_budget S-pairs have been reduced.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex(),
                         const GroebnerOptions& options = {});

/// Converts a zero-dimensional reduced basis to the reduced basis for
/// `target` by linear algebra in the quotient ring.
GroebnerBasis fglm(const GroebnerBasis& g, const MonomialOrder& target, const GroebnerOptions& options = {});

/// Fully reduced remainder of f modulo g's basis.
MPoly normal_form(const MPoly& f, const GroebnerBasis& g);

MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order);
/// Exhaustive check that every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(const GroebnerBasis& g);

/// I intersected with the ring of the last arity-k variables (arity kept).
Ideal eliminate(const Ideal& ideal, unsigned k, const GroebnerOptions& options = {});

/// I : f^oo through I + (1 - z f) and elimination of z.
Ideal saturate(const Ideal& ideal, const MPoly& f, const GroebnerOptions& options = {});

/// Krull dimension of the affine variety; -1 for the unit ideal.
int dimension(const Ideal& ideal, const GroebnerOptions& options = {});
int dimension(const GroebnerBasis& g);

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});
bool ideal_contains(const GroebnerBasis& g, const Ideal& b);

/// A basis of {f in I : deg f <= 1}, in reduced echelon form with variable
/// columns t0, ..., t_{m-1} before the constant.
std::vector<MPoly> linear_part(const Ideal& ideal, const GroebnerOptions& options = {});

}  // namespace hc
