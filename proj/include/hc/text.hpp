#pragma once

// Canonical text rendering and the expression parser.
//
// Rendering: polynomial terms in graded-lex descending order with explicit
// `*` and `^`; field elements in ascending powers of their generator, named
// by NumberField::name(); rationals as p/q. Everything rendered parses back
// to the same value.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hc/mpoly.hpp"
#include "hc/ratfunc.hpp"

namespace hc {

std::string render(const FieldElement& x);
std::string render(const MPoly& f, const std::vector<std::string>& vars);
std::string render(const UPoly& f, const std::string& var);
std::string render(const RatFunc& f, const std::string& var);
std::string render(const MPoly& num, const MPoly& den, const std::vector<std::string>& vars);

/// t0, ..., t{n-1}
std::vector<std::string> descent_vars(unsigned n);

struct Fraction {
    MPoly num;
    MPoly den;
};

/// Where a parsed string starts in its enclosing file, for error positions.
struct SourcePos {
    int line = 1;
    int column = 1;
};

/// Parses integers, variables from `vars`, named constants, + - * / ^ and
/// parentheses. Errors are input_error("line L, column C: ...").
Fraction parse_expression(std::string_view text, const std::vector<std::string>& vars,
                          const std::map<std::string, FieldElement>& constants = {}, SourcePos origin = {});

/// Univariate helpers on top of parse_expression.
UPoly parse_upoly(std::string_view text, const std::string& var,
                  const std::map<std::string, FieldElement>& constants = {}, SourcePos origin = {});
RatFunc parse_ratfunc(std::string_view text, const std::string& var,
                      const std::map<std::string, FieldElement>& constants = {}, SourcePos origin = {});

}  // namespace hc
