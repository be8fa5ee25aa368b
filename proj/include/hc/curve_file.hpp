#pragma once

// Curve input files: one `key = "value"` per line, `#` comments.
//
//   minpoly = "x^4-4*x^3+12*x^2-16*x+8"   generator a, over Q or over base
//   base    = "x^2+6*x+10"                optional; generator g over Q
//   x1      = "(t-a)^2"                    components x1, x2, ... in t, a (and g)
//   budget  = "100000"                     optional Groebner pair budget
//   primitive_cap = "64"                   optional primitive element search cap

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hc/descent.hpp"

namespace hc {

struct CurveFile {
    FieldPtr base;   // null for Q
    FieldPtr field;  // the extension generated by a
    std::vector<RatFunc> components;
    Parametrization phi;
    std::optional<std::size_t> budget;
    std::optional<unsigned> primitive_cap;
};

CurveFile parse_curve_file(std::string_view text);
CurveFile load_curve_file(const std::string& path);

}  // namespace hc
