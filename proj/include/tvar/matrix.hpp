#pragma once

// Dense integer matrices with the two normal forms everything downstream
// leans on.  Smith normal form carries its unimodular transforms so callers
// can build sections and kernels; Hermite normal form gives a canonical
// basis for comparing row lattices.

#include <algorithm>
#include <vector>

#include "tvar/numeric.hpp"

namespace tvar {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw precondition_error("DimensionMismatch", "ragged matrix initializer");
            for (const Int& x : row) data_.push_back(x);
        }
    }

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IVec>& rows) {
        IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw precondition_error("DimensionMismatch", "ragged row list");
            for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IVec row(size_t i) const {
        IVec r(cols_);
        for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    IVec col(size_t j) const {
        IVec c(rows_);
        for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    std::vector<IVec> row_list() const {
        std::vector<IVec> out;
        out.reserve(rows_);
        for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_)
            throw precondition_error("DimensionMismatch", "matrix product shape mismatch");
        IntMatrix p(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    IVec apply(const IVec& v) const {
        if (v.size() != cols_)
            throw precondition_error("DimensionMismatch", "matrix-vector shape mismatch");
        IVec out(rows_, Int(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    QVec apply(const QVec& v) const {
        if (v.size() != cols_)
            throw precondition_error("DimensionMismatch", "matrix-vector shape mismatch");
        QVec out(rows_, Rat(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out[i] += Rat((*this)(i, j)) * v[j];
        return out;
    }

    bool is_zero() const {
        for (const Int& x : data_)
            if (x != 0) return false;
        return true;
    }

private:
    size_t rows_, cols_;
    std::vector<Int> data_;
};

struct SmithForm {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix s;  // diagonal, u*a*v == s
    IntMatrix v;  // cols x cols, unimodular
};

namespace detail {

inline void swap_rows(IntMatrix& m, size_t a, size_t b) {
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

inline void swap_cols(IntMatrix& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

inline void negate_row(IntMatrix& m, size_t r) {
    for (size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// row[a] -= q * row[b]
inline void add_row_multiple(IntMatrix& m, size_t a, size_t b, const Int& q) {
    if (q == 0) return;
    for (size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}

inline void add_col_multiple(IntMatrix& m, size_t a, size_t b, const Int& q) {
    if (q == 0) return;
    for (size_t i = 0; i < m.rows(); ++i) m(i, a) -= q * m(i, b);
}

// Extended gcd: returns g and coefficients with p*a + q*b == g, g >= 0.
inline Int xgcd(const Int& a, const Int& b, Int& p, Int& q) {
    if (b == 0) {
        if (a < 0) { p = -1; q = 0; return -a; }
        p = 1; q = 0;
        return a;
    }
    Int p1;
    Int g = xgcd(b, a % b, q, p1);
    p = p1;
    q -= (a / b) * p1;
    return g;
}

// Replaces rows (r1, r2) of m by the gcd combination that zeroes m(r2, c),
// mirroring the operation on t.  The 2x2 transform has determinant 1.
inline void gcd_row_step(IntMatrix& m, IntMatrix& t, size_t r1, size_t r2, size_t c) {
    Int a = m(r1, c), b = m(r2, c);
    if (b == 0) return;
    if (a == 0) {  // plain swap, keep bookkeeping simple
        swap_rows(m, r1, r2);
        swap_rows(t, r1, r2);
        negate_row(m, r2);
        negate_row(t, r2);
        return;
    }
    if (b % a == 0) {  // plain elimination leaves the pivot row untouched
        add_row_multiple(m, r2, r1, b / a);
        add_row_multiple(t, r2, r1, b / a);
        return;
    }
    Int p, q;
    Int g = xgcd(a, b, p, q);
    Int af = a / g, bf = b / g;
    for (size_t j = 0; j < m.cols(); ++j) {
        Int x = m(r1, j), y = m(r2, j);
        m(r1, j) = p * x + q * y;
        m(r2, j) = -bf * x + af * y;
    }
    for (size_t j = 0; j < t.cols(); ++j) {
        Int x = t(r1, j), y = t(r2, j);
        t(r1, j) = p * x + q * y;
        t(r2, j) = -bf * x + af * y;
    }
}

inline void gcd_col_step(IntMatrix& m, IntMatrix& t, size_t c1, size_t c2, size_t r) {
    Int a = m(r, c1), b = m(r, c2);
    if (b == 0) return;
    if (a == 0) {
        swap_cols(m, c1, c2);
        swap_cols(t, c1, c2);
        for (size_t i = 0; i < m.rows(); ++i) m(i, c2) = -m(i, c2);
        for (size_t i = 0; i < t.rows(); ++i) t(i, c2) = -t(i, c2);
        return;
    }
    if (b % a == 0) {
        add_col_multiple(m, c2, c1, b / a);
        add_col_multiple(t, c2, c1, b / a);
        return;
    }
    Int p, q;
    Int g = xgcd(a, b, p, q);
    Int af = a / g, bf = b / g;
    for (size_t i = 0; i < m.rows(); ++i) {
        Int x = m(i, c1), y = m(i, c2);
        m(i, c1) = p * x + q * y;
        m(i, c2) = -bf * x + af * y;
    }
    for (size_t i = 0; i < t.rows(); ++i) {
        Int x = t(i, c1), y = t(i, c2);
        t(i, c1) = p * x + q * y;
        t(i, c2) = -bf * x + af * y;
    }
}

}  // namespace detail

// Smith normal form with transforms: u*a*v = s, s diagonal with
// non-negative entries forming a divisibility chain d1 | d2 | ...
inline SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm f{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& s = f.s;
    size_t m = a.rows(), n = a.cols();
    size_t limit = std::min(m, n);

    for (size_t t = 0; t < limit; ++t) {
        // pivot: smallest nonzero |entry| in the remaining block
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                if (s(i, j) == 0) continue;
                if (!found || abs(s(i, j)) < abs(s(pi, pj))) { pi = i; pj = j; found = true; }
            }
        if (!found) break;
        if (pi != t) { detail::swap_rows(s, t, pi); detail::swap_rows(f.u, t, pi); }
        if (pj != t) { detail::swap_cols(s, t, pj); detail::swap_cols(f.v, t, pj); }

        // alternate row and column elimination until the cross is clear
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < m; ++i)
                if (s(i, t) != 0) { detail::gcd_row_step(s, f.u, t, i, t); dirty = true; }
            for (size_t j = t + 1; j < n; ++j)
                if (s(t, j) != 0) { detail::gcd_col_step(s, f.v, t, j, t); dirty = true; }
        }
        if (s(t, t) < 0) { detail::negate_row(s, t); detail::negate_row(f.u, t); }
    }

    // enforce the divisibility chain
    for (size_t t = 0; t + 1 < limit; ++t) {
        if (s(t, t) == 0 || s(t + 1, t + 1) % s(t, t) == 0) continue;
        // fold the next diagonal entry into column t and redo the corner
        detail::add_col_multiple(s, t, t + 1, Int(-1));
        detail::add_col_multiple(f.v, t, t + 1, Int(-1));
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < s.rows(); ++i)
                if (s(i, t) != 0) { detail::gcd_row_step(s, f.u, t, i, t); dirty = true; }
            for (size_t j = t + 1; j < s.cols(); ++j)
                if (s(t, j) != 0) { detail::gcd_col_step(s, f.v, t, j, t); dirty = true; }
        }
        if (s(t, t) < 0) { detail::negate_row(s, t); detail::negate_row(f.u, t); }
        t = static_cast<size_t>(-1);  // restart the chain scan from the top
    }
    return f;
}

// Row-style Hermite normal form: echelon, positive pivots, entries above a
// pivot reduced to [0, pivot).  Zero rows are dropped, so the result is a
// canonical basis of the row lattice.
inline IntMatrix hermite_normal_form(const IntMatrix& a) {
    IntMatrix h = a;
    IntMatrix dummy(h.rows(), 0);
    size_t m = h.rows(), n = h.cols();
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t piv = r;
        bool found = false;
        for (size_t i = r; i < m; ++i)
            if (h(i, c) != 0) { piv = i; found = true; break; }
        if (!found) continue;
        if (piv != r) { detail::swap_rows(h, r, piv); }
        for (size_t i = r + 1; i < m; ++i)
            if (h(i, c) != 0) detail::gcd_row_step(h, dummy, r, i, c);
        if (h(r, c) < 0) detail::negate_row(h, r);
        for (size_t i = 0; i < r; ++i) {
            Int q = h(i, c) / h(r, c);
            if (h(i, c) % h(r, c) < 0) q -= 1;  // floored quotient keeps 0 <= entry < pivot
            detail::add_row_multiple(h, i, r, q);
        }
        ++r;
    }
    IntMatrix out(r, n);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
    return out;
}

// Rank over the rationals, by fraction-free elimination on a copy.
inline size_t rank(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    size_t r = 0;
    size_t limit = std::min(a.rows(), a.cols());
    for (size_t i = 0; i < limit; ++i)
        if (f.s(i, i) != 0) ++r;
    return r;
}

// True when the two matrices generate the same row lattice.
inline bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return hermite_normal_form(a) == hermite_normal_form(b);
}

// Integer determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw precondition_error("DimensionMismatch", "determinant of non-square matrix");
    size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    Int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            size_t piv = k;
            bool found = false;
            for (size_t i = k + 1; i < n; ++i)
                if (w(i, k) != 0) { piv = i; found = true; break; }
            if (!found) return 0;
            detail::swap_rows(w, k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

}  // namespace tvar
