#pragma once

// Exact rational polyhedra in V-representation: hull of vertices plus a
// pointed recession cone with primitive integer ray generators.  The
// EmptyPolyhedron marker is a distinct state, never an empty vertex list.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "tvar/linprog.hpp"
#include "tvar/matrix.hpp"
#include "tvar/qlinalg.hpp"

namespace tvar {

// One linear condition a.x (= or >=) rhs.
struct LinCond {
    QVec a;
    Rat rhs;
};

struct Polyhedron {
    size_t ambient_dim = 0;
    std::vector<QVec> vertices;
    std::vector<IVec> rays;
    bool empty_marker = false;

    static Polyhedron empty(size_t dim) {
        Polyhedron p;
        p.ambient_dim = dim;
        p.empty_marker = true;
        return p;
    }
    bool is_empty() const { return empty_marker; }

    bool operator==(const Polyhedron& o) const {
        if (ambient_dim != o.ambient_dim || empty_marker != o.empty_marker) return false;
        return vertices == o.vertices && rays == o.rays;
    }
};

struct Cone {
    size_t ambient_dim = 0;
    std::vector<IVec> generators;
};

namespace detail {

inline void sort_dedup(std::vector<QVec>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline void sort_dedup(std::vector<IVec>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// all size-k index subsets of {0..n-1}, visitor returns false to abort
template <typename Fn>
inline void for_each_subset(size_t n, size_t k, Fn fn) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    if (k == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        if (idx[i] == i + n - k) return;
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// Canonical ordering so equal sets compare equal.
inline Polyhedron canonicalize(Polyhedron p) {
    detail::sort_dedup(p.vertices);
    detail::sort_dedup(p.rays);
    return p;
}

// Extreme rays of {x : rows.x = 0 for eq rows, rows.x >= 0 for ineq rows},
// assuming the cone is pointed (rank of stacked rows = dim).  Every feasible
// kernel vector of a rank dim-1 subsystem is an extreme ray and vice versa.
inline std::vector<IVec> pointed_cone_rays(size_t dim,
                                           const std::vector<QVec>& eq,
                                           const std::vector<QVec>& ineq) {
    std::vector<IVec> rays;
    if (dim == 0) return rays;
    size_t base = q_rank(eq);
    if (base + ineq.size() + 1 < dim + 1) return rays;  // cannot reach rank dim-1
    size_t need = dim - 1 >= base ? dim - 1 - base : 0;
    detail::for_each_subset(ineq.size(), need, [&](const std::vector<size_t>& sel) {
        std::vector<QVec> sys = eq;
        for (size_t i : sel) sys.push_back(ineq[i]);
        std::vector<QVec> kernel = nullspace(sys, dim);
        if (kernel.size() != 1) return;
        QVec dir = kernel[0];
        int sign = 0;
        bool ok = true;
        for (const QVec& c : ineq) {
            Rat t = dot(c, dir);
            if (t == 0) continue;
            int s = t > 0 ? 1 : -1;
            if (sign == 0) sign = s;
            else if (sign != s) { ok = false; break; }
        }
        if (!ok) return;
        if (sign < 0)
            for (Rat& x : dir) x = -x;
        if (is_zero(dir)) return;
        rays.push_back(primitive(dir));
    });
    detail::sort_dedup(rays);
    return rays;
}

// V-representation of {x : eq, ineq}.  EmptyPolyhedron marker when
// infeasible; NotPointed when the feasible set contains a line.
inline Polyhedron vertex_enumeration(size_t dim,
                                     const std::vector<LinCond>& equalities,
                                     const std::vector<LinCond>& inequalities) {
    if (dim > 16)
        throw precondition_error("DimensionTooLarge", "ambient dimension exceeds 16");
    for (const LinCond& c : equalities)
        if (c.a.size() != dim) throw precondition_error("DimensionMismatch", "equality width mismatch");
    for (const LinCond& c : inequalities)
        if (c.a.size() != dim) throw precondition_error("DimensionMismatch", "inequality width mismatch");

    std::vector<QVec> eq_a, ineq_a;
    QVec eq_b, ineq_b;
    for (const LinCond& c : equalities) { eq_a.push_back(c.a); eq_b.push_back(c.rhs); }
    for (const LinCond& c : inequalities) { ineq_a.push_back(c.a); ineq_b.push_back(c.rhs); }

    if (!lp_feasible(dim, ineq_a, ineq_b, eq_a, eq_b)) return Polyhedron::empty(dim);

    std::vector<QVec> all = eq_a;
    all.insert(all.end(), ineq_a.begin(), ineq_a.end());
    if (q_rank(all) < dim)
        throw precondition_error("NotPointed", "feasible set contains a line");

    Polyhedron p;
    p.ambient_dim = dim;

    size_t base = q_rank(eq_a);
    size_t need = dim - base;
    auto feasible = [&](const QVec& x) {
        for (size_t i = 0; i < eq_a.size(); ++i)
            if (dot(eq_a[i], x) != eq_b[i]) return false;
        for (size_t i = 0; i < ineq_a.size(); ++i)
            if (dot(ineq_a[i], x) < ineq_b[i]) return false;
        return true;
    };
    detail::for_each_subset(ineq_a.size(), need, [&](const std::vector<size_t>& sel) {
        std::vector<QVec> sys = eq_a;
        QVec rhs = eq_b;
        for (size_t i : sel) { sys.push_back(ineq_a[i]); rhs.push_back(ineq_b[i]); }
        if (q_rank(sys) != dim) return;
        std::optional<QVec> x = solve_linear(sys, rhs);
        if (x && feasible(*x)) p.vertices.push_back(*x);
    });
    p.rays = pointed_cone_rays(dim, eq_a, ineq_a);
    return canonicalize(p);
}

namespace detail {

// v in conv(points) + cone(rays)?  Pure LP feasibility in the multipliers.
inline bool in_hull(const QVec& v, const std::vector<QVec>& points, const std::vector<IVec>& rays) {
    size_t np = points.size(), nr = rays.size();
    if (np == 0) return false;
    size_t dim = v.size();
    std::vector<QVec> eq_a;
    QVec eq_b;
    for (size_t d = 0; d < dim; ++d) {
        QVec row(np + nr);
        for (size_t i = 0; i < np; ++i) row[i] = points[i][d];
        for (size_t j = 0; j < nr; ++j) row[np + j] = Rat(rays[j][d]);
        eq_a.push_back(std::move(row));
        eq_b.push_back(v[d]);
    }
    QVec ones(np + nr, Rat(0));
    for (size_t i = 0; i < np; ++i) ones[i] = 1;
    eq_a.push_back(std::move(ones));
    eq_b.push_back(Rat(1));
    // multipliers are sign-constrained, so solve in standard form directly
    QVec zero(np + nr, Rat(0));
    return simplex_standard(eq_a, eq_b, zero).status != LPStatus::infeasible;
}

// r in cone(rays)?
inline bool in_cone(const IVec& r, const std::vector<IVec>& rays) {
    size_t nr = rays.size();
    size_t dim = r.size();
    if (nr == 0) return is_zero(r);
    std::vector<QVec> eq_a;
    QVec eq_b;
    for (size_t d = 0; d < dim; ++d) {
        QVec row(nr);
        for (size_t j = 0; j < nr; ++j) row[j] = Rat(rays[j][d]);
        eq_a.push_back(std::move(row));
        eq_b.push_back(Rat(r[d]));
    }
    QVec zero(nr, Rat(0));
    return simplex_standard(eq_a, eq_b, zero).status != LPStatus::infeasible;
}

}  // namespace detail

// Minimal V-representation of conv(points) + cone(ray directions).
// Throws NotPointed if the given rays span a cone containing a line.
inline Polyhedron hull(size_t dim, std::vector<QVec> points, std::vector<IVec> rays) {
    if (points.empty()) return Polyhedron::empty(dim);
    for (const QVec& p : points)
        if (p.size() != dim) throw precondition_error("DimensionMismatch", "point width mismatch");
    for (const IVec& r : rays)
        if (r.size() != dim) throw precondition_error("DimensionMismatch", "ray width mismatch");
    detail::sort_dedup(points);
    for (IVec& r : rays) r = primitive(r);
    detail::sort_dedup(rays);

    // pointedness: no nontrivial nonnegative combination of rays vanishes
    if (!rays.empty()) {
        size_t nr = rays.size();
        std::vector<QVec> eq_a;
        QVec eq_b;
        for (size_t d = 0; d < dim; ++d) {
            QVec row(nr);
            for (size_t j = 0; j < nr; ++j) row[j] = Rat(rays[j][d]);
            eq_a.push_back(std::move(row));
            eq_b.push_back(Rat(0));
        }
        QVec ones(nr, Rat(1));
        eq_a.push_back(ones);
        eq_b.push_back(Rat(1));
        QVec zero(nr, Rat(0));
        if (simplex_standard(eq_a, eq_b, zero).status != LPStatus::infeasible)
            throw precondition_error("NotPointed", "recession cone contains a line");
    }

    // drop redundant rays, then non-vertex points
    for (size_t j = 0; j < rays.size();) {
        std::vector<IVec> others = rays;
        others.erase(others.begin() + j);
        if (detail::in_cone(rays[j], others)) rays = std::move(others);
        else ++j;
    }
    for (size_t i = 0; i < points.size();) {
        std::vector<QVec> others = points;
        others.erase(others.begin() + i);
        if (detail::in_hull(points[i], others, rays)) points = std::move(others);
        else ++i;
    }
    Polyhedron p;
    p.ambient_dim = dim;
    p.vertices = std::move(points);
    p.rays = std::move(rays);
    return canonicalize(p);
}

inline Polyhedron single_point(const QVec& v) {
    Polyhedron p;
    p.ambient_dim = v.size();
    p.vertices = {v};
    return p;
}

// Image of a polyhedron under an integer linear map.
inline Polyhedron linear_image(const IntMatrix& map, const Polyhedron& d) {
    if (map.cols() != d.ambient_dim)
        throw precondition_error("DimensionMismatch", "map columns must match ambient dimension");
    if (d.is_empty()) return Polyhedron::empty(map.rows());
    std::vector<QVec> pts;
    for (const QVec& v : d.vertices) pts.push_back(map.apply(v));
    std::vector<IVec> rays;
    for (const IVec& r : d.rays) {
        IVec img = map.apply(r);
        if (!is_zero(img)) rays.push_back(primitive(img));
    }
    return hull(map.rows(), std::move(pts), std::move(rays));
}

// min over the polyhedron of <u, x>; nullopt encodes minus infinity.
inline std::optional<Rat> support_min(const Polyhedron& d, const QVec& u) {
    if (u.size() != d.ambient_dim)
        throw precondition_error("DimensionMismatch", "functional width mismatch");
    if (d.is_empty())
        throw precondition_error("EmptyPolyhedron", "support of the empty set is undefined");
    for (const IVec& r : d.rays)
        if (dot(r, u) < 0) return std::nullopt;
    Rat best;
    bool first = true;
    for (const QVec& v : d.vertices) {
        Rat t = dot(u, v);
        if (first || t < best) { best = t; first = false; }
    }
    return best;
}

inline Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw precondition_error("DimensionMismatch", "summands in different ambient spaces");
    if (a.is_empty() || b.is_empty()) return Polyhedron::empty(a.ambient_dim);
    std::vector<QVec> pts;
    for (const QVec& v : a.vertices)
        for (const QVec& w : b.vertices) pts.push_back(add(v, w));
    std::vector<IVec> rays = a.rays;
    rays.insert(rays.end(), b.rays.begin(), b.rays.end());
    return hull(a.ambient_dim, std::move(pts), std::move(rays));
}

// Basis of the linear span of (d - d).
inline std::vector<QVec> minimal_subspace(const Polyhedron& d) {
    if (d.is_empty())
        throw precondition_error("EmptyPolyhedron", "span of the empty set is undefined");
    std::vector<QVec> dirs;
    for (size_t i = 1; i < d.vertices.size(); ++i) dirs.push_back(sub(d.vertices[i], d.vertices[0]));
    for (const IVec& r : d.rays) dirs.push_back(to_qvec(r));
    std::vector<size_t> piv = rref(dirs);
    dirs.resize(piv.size());
    return dirs;
}

inline size_t affine_dim(const Polyhedron& d) { return minimal_subspace(d).size(); }

// True when some translate of the line R*dir meets d in a segment of
// positive length: equivalently dir lies in span(d - d).
inline bool line_slice_positive_length(const Polyhedron& d, const QVec& dir) {
    if (dir.size() != d.ambient_dim)
        throw precondition_error("DimensionMismatch", "direction width mismatch");
    if (is_zero(dir)) throw precondition_error("ZeroDirection", "direction must be nonzero");
    if (d.is_empty()) return false;
    return in_span(minimal_subspace(d), dir);
}

inline Cone tail_cone(const Polyhedron& d) {
    if (d.is_empty())
        throw precondition_error("EmptyPolyhedron", "tail cone of the empty set is undefined");
    return Cone{d.ambient_dim, d.rays};
}

struct DualDecomposition {
    std::vector<IVec> rays;       // extreme rays modulo lineality
    std::vector<IVec> lineality;  // basis of the lineality space
};

// Dual of cone(generators): {u : <u,g> >= 0 for all g}, split into extreme
// rays and a lineality basis.  Works in coordinates on the span of the
// generators so the pointed-cone ray enumeration applies.
inline DualDecomposition dual_cone_full(size_t dim, const std::vector<IVec>& generators) {
    DualDecomposition out;
    std::vector<QVec> g;
    for (const IVec& v : generators) g.push_back(to_qvec(v));
    // lineality = kernel of the generator matrix
    for (const QVec& v : nullspace(g, dim)) out.lineality.push_back(primitive(v));
    std::vector<QVec> basis = g;
    std::vector<size_t> piv = rref(basis);
    size_t r = piv.size();
    if (r == 0) { detail::sort_dedup(out.lineality); return out; }
    // rows of `basis` span row space; u = B^T y reduces the dual to a
    // pointed cone in y-coordinates
    basis.resize(r);
    std::vector<QVec> ineq;
    for (const QVec& gv : g) {
        QVec row(r);
        for (size_t i = 0; i < r; ++i) row[i] = dot(gv, basis[i]);
        ineq.push_back(std::move(row));
    }
    for (const IVec& y : pointed_cone_rays(r, {}, ineq)) {
        QVec u(dim, Rat(0));
        for (size_t i = 0; i < r; ++i)
            for (size_t d2 = 0; d2 < dim; ++d2) u[d2] += Rat(y[i]) * basis[i][d2];
        out.rays.push_back(primitive(u));
    }
    detail::sort_dedup(out.rays);
    detail::sort_dedup(out.lineality);
    return out;
}

inline Cone dual_cone(const Cone& c) {
    DualDecomposition d = dual_cone_full(c.ambient_dim, c.generators);
    Cone out{c.ambient_dim, d.rays};
    for (const IVec& l : d.lineality) {
        out.generators.push_back(l);
        IVec neg(l.size());
        for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        out.generators.push_back(neg);
    }
    detail::sort_dedup(out.generators);
    return out;
}

struct HRepresentation {
    std::vector<LinCond> equalities;    // a.x = rhs
    std::vector<LinCond> inequalities;  // a.x >= rhs
};

// H-representation via the homogenization cone: P = {x : (x,1) in C} with
// C spanned by (v,1) and (r,0); valid inequalities of P are the dual of C.
inline HRepresentation facet_enumeration(const Polyhedron& d) {
    if (d.is_empty())
        throw precondition_error("EmptyPolyhedron", "no facets for the empty set");
    size_t n = d.ambient_dim;
    std::vector<IVec> gens;
    std::vector<QVec> qgens;
    for (const QVec& v : d.vertices) {
        QVec h = v;
        h.push_back(Rat(1));
        qgens.push_back(h);
    }
    for (const IVec& r : d.rays) {
        QVec h = to_qvec(r);
        h.push_back(Rat(0));
        qgens.push_back(h);
    }
    for (const QVec& q : qgens) gens.push_back(primitive(q));
    DualDecomposition dual = dual_cone_full(n + 1, gens);
    HRepresentation h;
    auto split = [&](const IVec& w, bool equality) {
        QVec a(n);
        for (size_t i = 0; i < n; ++i) a[i] = Rat(w[i]);
        Rat rhs = -Rat(w[n]);
        if (equality) h.equalities.push_back({a, rhs});
        else h.inequalities.push_back({a, rhs});
    };
    for (const IVec& w : dual.lineality) split(w, true);
    for (const IVec& w : dual.rays) split(w, false);
    // the homogenization coordinate alone gives the vacuous 1 >= 0 facet
    auto vacuous = [&](const LinCond& c) { return is_zero(c.a); };
    h.inequalities.erase(std::remove_if(h.inequalities.begin(), h.inequalities.end(), vacuous),
                         h.inequalities.end());
    return h;
}

}  // namespace tvar
