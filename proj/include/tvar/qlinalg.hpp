#pragma once

// Gaussian elimination over the rationals: rank, solving, null spaces,
// span membership.  Systems are small, so plain row reduction is enough.

#include <optional>
#include <vector>

#include "tvar/numeric.hpp"

namespace tvar {

// Reduced row echelon form in place; returns the pivot column indices.
inline std::vector<size_t> rref(std::vector<QVec>& rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) return pivots;
    size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rat inv = rows[r][c];
        for (size_t j = c; j < ncols; ++j) rows[r][j] /= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat m = rows[i][c];
            for (size_t j = c; j < ncols; ++j) rows[i][j] -= m * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t q_rank(std::vector<QVec> rows) { return rref(rows).size(); }

// One solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<QVec> solve_linear(const std::vector<QVec>& a, const QVec& b) {
    if (a.size() != b.size())
        throw precondition_error("DimensionMismatch", "system rows and rhs length differ");
    if (a.empty()) return QVec{};
    size_t n = a[0].size();
    std::vector<QVec> aug(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    std::vector<size_t> piv = rref(aug);
    if (!piv.empty() && piv.back() == n) return std::nullopt;
    QVec x(n, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][n];
    return x;
}

// Basis of the kernel of A (ncols passed separately so A may have no rows).
inline std::vector<QVec> nullspace(std::vector<QVec> a, size_t ncols) {
    std::vector<size_t> piv = rref(a);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : piv) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(ncols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][c];
        basis.push_back(v);
    }
    return basis;
}

inline Rat q_determinant(std::vector<QVec> a) {
    size_t n = a.size();
    for (const QVec& row : a)
        if (row.size() != n) throw precondition_error("DimensionMismatch", "determinant of a non-square matrix");
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat m = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= m * a[c][j];
        }
    }
    return det;
}

inline bool in_span(const std::vector<QVec>& vectors, const QVec& target) {
    if (is_zero(target)) return true;
    std::vector<QVec> with = vectors;
    with.push_back(target);
    return q_rank(vectors) == q_rank(with);
}

}  // namespace tvar
