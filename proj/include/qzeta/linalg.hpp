#pragma once

#include <utility>
#include <vector>

#include "qzeta/errors.hpp"

namespace qzeta {

/// Dense exact matrices over a field; used for the small systems in this
/// library (Reynolds rank reduction, zeta systems, nullspaces).
template <class K>
using Matrix = std::vector<std::vector<K>>;

/// In-place reduced row echelon form; returns pivot column indices.
template <class K>
std::vector<size_t> rref(Matrix<K>& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && is_zero_value(m[pivot][c])) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const K inv = from_int(1, m[r][c]) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero_value(m[i][c])) continue;
            const K factor = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Solves the square system A x = b exactly. Pivoting picks the first row
/// with a nonzero entry, so the answer is independent of row order.
template <class K>
std::vector<K> solve_linear(Matrix<K> a, std::vector<K> b) {
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw error("solve_linear expects a square matrix");
        a[i].push_back(b[i]);
    }
    const auto pivots = rref(a);
    if (pivots.size() != n || (!pivots.empty() && pivots.back() == n))
        throw singular_system("linear system is singular");
    std::vector<K> x;
    x.reserve(n);
    for (size_t i = 0; i < n; ++i) x.push_back(a[i][n]);
    return x;
}

/// Basis of the right nullspace of A (free variables set to one in turn).
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> a) {
    if (a.empty()) return {};
    const size_t cols = a[0].size();
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    const K one = from_int(1, a[0][0]);
    const K zero = zero_like(a[0][0]);
    std::vector<std::vector<K>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(cols, zero);
        v[free_col] = one;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qzeta
