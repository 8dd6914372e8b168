#pragma once

// Exact rational linear programming: two-phase simplex with Bland's rule.
// Small dense tableaus only; every pivot is exact, so cycling is the only
// hazard and Bland's rule removes it.

#include <optional>
#include <vector>

#include "tvar/numeric.hpp"

namespace tvar {

enum class LPStatus { optimal, unbounded, infeasible };

struct LPResult {
    LPStatus status;
    Rat value;  // objective at optimum, meaningful for optimal only
    QVec x;     // an optimal point, meaningful for optimal only
};

namespace detail {

// Tableau rows: [A | b] with b >= 0 maintained; basis[i] = variable of row i.
struct Tableau {
    std::vector<QVec> rows;  // m x (n+1)
    QVec cost;               // n+1, reduced costs; last entry = -objective
    std::vector<size_t> basis;
    size_t n;

    // Bland: entering = lowest-index column with positive reduced cost.
    bool pivot_once() {
        size_t enter = n;
        for (size_t j = 0; j < n; ++j)
            if (cost[j] > 0) { enter = j; break; }
        if (enter == n) return false;  // optimal
        size_t leave = rows.size();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][enter] <= 0) continue;
            if (leave == rows.size()) { leave = i; continue; }
            Rat cur = rows[i][n] / rows[i][enter];
            Rat best = rows[leave][n] / rows[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == rows.size())
            throw std::domain_error("unbounded");  // caught by driver
        pivot(leave, enter);
        return true;
    }

    void pivot(size_t r, size_t c) {
        Rat inv = rows[r][c];
        for (Rat& x : rows[r]) x /= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (size_t j = 0; j <= n; ++j) rows[i][j] -= f * rows[r][j];
        }
        if (cost[c] != 0) {
            Rat f = cost[c];
            for (size_t j = 0; j <= n; ++j) cost[j] -= f * rows[r][j];
        }
        basis[r] = c;
    }
};

}  // namespace detail

// maximize c.x subject to A x = b, x >= 0.  A given as rows.
inline LPResult simplex_standard(std::vector<QVec> a, QVec b, QVec c) {
    size_t m = a.size();
    size_t n = c.size();
    for (const QVec& row : a)
        if (row.size() != n) throw precondition_error("DimensionMismatch", "LP row width mismatch");
    if (b.size() != m) throw precondition_error("DimensionMismatch", "LP rhs length mismatch");

    for (size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (Rat& x : a[i]) x = -x;
            b[i] = -b[i];
        }

    // phase 1: artificials, maximize -(sum of artificials)
    detail::Tableau t;
    t.n = n + m;
    t.rows.assign(m, QVec(t.n + 1, Rat(0)));
    t.basis.resize(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) t.rows[i][j] = a[i][j];
        t.rows[i][n + i] = 1;
        t.rows[i][t.n] = b[i];
        t.basis[i] = n + i;
    }
    t.cost.assign(t.n + 1, Rat(0));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < m; ++i) t.cost[j] += t.rows[i][j];
    for (size_t i = 0; i < m; ++i) t.cost[t.n] += t.rows[i][t.n];
    // cost vector now holds sum of rows; maximizing -(sum artificials) is the
    // same as driving this residual to zero
    try {
        while (t.pivot_once()) {}
    } catch (const std::domain_error&) {
        throw Error(ErrorFamily::internal, "LPInternal", "phase 1 cannot be unbounded");
    }
    if (t.cost[t.n] != 0) return {LPStatus::infeasible, Rat(0), {}};

    // drive remaining artificials out of the basis or drop redundant rows
    for (size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < n) { ++i; continue; }
        size_t c2 = n;
        for (size_t j = 0; j < n; ++j)
            if (t.rows[i][j] != 0) { c2 = j; break; }
        if (c2 == n) {
            t.rows.erase(t.rows.begin() + i);
            t.basis.erase(t.basis.begin() + i);
        } else {
            t.pivot(i, c2);
            ++i;
        }
    }

    // phase 2: true objective over the n structural columns
    detail::Tableau t2;
    t2.n = n;
    t2.basis = t.basis;
    t2.rows.assign(t.rows.size(), QVec(n + 1, Rat(0)));
    for (size_t i = 0; i < t.rows.size(); ++i) {
        for (size_t j = 0; j < n; ++j) t2.rows[i][j] = t.rows[i][j];
        t2.rows[i][n] = t.rows[i][t.n];
    }
    t2.cost.assign(n + 1, Rat(0));
    for (size_t j = 0; j < n; ++j) t2.cost[j] = c[j];
    for (size_t i = 0; i < t2.rows.size(); ++i) {
        Rat f = t2.cost[t2.basis[i]];
        if (f == 0) continue;
        for (size_t j = 0; j <= n; ++j) t2.cost[j] -= f * t2.rows[i][j];
    }
    try {
        while (t2.pivot_once()) {}
    } catch (const std::domain_error&) {
        return {LPStatus::unbounded, Rat(0), {}};
    }
    QVec x(n, Rat(0));
    for (size_t i = 0; i < t2.rows.size(); ++i) x[t2.basis[i]] = t2.rows[i][n];
    Rat value = 0;
    for (size_t j = 0; j < n; ++j) value += c[j] * x[j];
    return {LPStatus::optimal, value, x};
}

// maximize c.x subject to ineq_a x >= ineq_b and eq_a x = eq_b, x free.
inline LPResult lp_max(const QVec& c,
                       const std::vector<QVec>& ineq_a, const QVec& ineq_b,
                       const std::vector<QVec>& eq_a = {}, const QVec& eq_b = {}) {
    size_t n = c.size();
    size_t mi = ineq_a.size(), me = eq_a.size();
    // variables: x = p - q with p,q >= 0, plus one surplus per inequality
    size_t nv = 2 * n + mi;
    std::vector<QVec> rows;
    QVec rhs;
    for (size_t i = 0; i < mi; ++i) {
        QVec r(nv, Rat(0));
        for (size_t j = 0; j < n; ++j) { r[j] = ineq_a[i][j]; r[n + j] = -ineq_a[i][j]; }
        r[2 * n + i] = -1;
        rows.push_back(std::move(r));
        rhs.push_back(ineq_b[i]);
    }
    for (size_t i = 0; i < me; ++i) {
        QVec r(nv, Rat(0));
        for (size_t j = 0; j < n; ++j) { r[j] = eq_a[i][j]; r[n + j] = -eq_a[i][j]; }
        rows.push_back(std::move(r));
        rhs.push_back(eq_b[i]);
    }
    QVec cost(nv, Rat(0));
    for (size_t j = 0; j < n; ++j) { cost[j] = c[j]; cost[n + j] = -c[j]; }
    LPResult r = simplex_standard(rows, rhs, cost);
    if (r.status == LPStatus::optimal) {
        QVec x(n);
        for (size_t j = 0; j < n; ++j) x[j] = r.x[j] - r.x[n + j];
        r.x = std::move(x);
    }
    return r;
}

// Is {x : ineq_a x >= ineq_b, eq_a x = eq_b} nonempty?
inline bool lp_feasible(size_t n,
                        const std::vector<QVec>& ineq_a, const QVec& ineq_b,
                        const std::vector<QVec>& eq_a = {}, const QVec& eq_b = {}) {
    QVec zero(n, Rat(0));
    return lp_max(zero, ineq_a, ineq_b, eq_a, eq_b).status != LPStatus::infeasible;
}

}  // namespace tvar
