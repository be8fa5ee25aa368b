#pragma once

// Exact dense linear algebra over a field level.

#include <optional>
#include <vector>

#include "hc/field.hpp"

namespace hc {

using Row = std::vector<FieldElement>;
using Matrix = std::vector<Row>;

/// In-place reduced row echelon form (pivot = first nonzero entry in a column,
/// scanning rows top-down). Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in RREF-canonical form.
std::vector<Row> nullspace(Matrix m, std::size_t columns);

/// Some solution of m x = b (the one with free variables set to zero).
std::optional<Row> solve(const Matrix& m, const Row& b, std::size_t columns);

}  // namespace hc
