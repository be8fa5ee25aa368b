#include "hc/linalg.hpp"

namespace hc {

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const FieldElement inv = m[row][col].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const FieldElement f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

std::vector<Row> nullspace(Matrix m, std::size_t columns) {
    for (auto& r : m) r.resize(columns);
    auto pivots = rref(m);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        Row v(columns);
        v[free] = FieldElement(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Row> solve(const Matrix& m, const Row& b, std::size_t columns) {
    Matrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(columns);
        aug[i].push_back(b[i]);
    }
    auto pivots = rref(aug);
    Row x(columns);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == columns) return std::nullopt;
        x[pivots[i]] = aug[i][columns];
    }
    return x;
}

}  // namespace hc
