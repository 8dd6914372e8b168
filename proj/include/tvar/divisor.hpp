#pragma once

// Divisor evaluation D(u), graded section pieces over the plane, the
// two-segment algebra reconstruction, and weight bookkeeping read
// directly from the weight matrix.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvar/polynomial.hpp"
#include "tvar/presentation.hpp"

namespace tvar {

struct QDivisor {
    std::map<DivisorLabel, Rat> coefficients;

    bool operator==(const QDivisor& o) const { return coefficients == o.coefficients; }
};

inline Rat coefficient_of(const QDivisor& d, const DivisorLabel& l) {
    auto it = d.coefficients.find(l);
    return it == d.coefficients.end() ? Rat(0) : it->second;
}

// D(u): one support minimum per divisor label
inline QDivisor evaluate(const AHPresentation& pres, const IVec& u) {
    if (u.size() != pres.lattice_rank)
        throw precondition_error("DimensionMismatch", "weight vector has wrong length");
    QDivisor out;
    for (const PresentationTerm& t : pres.terms) {
        if (out.coefficients.count(t.label))
            throw precondition_error("DuplicateLabel", "two terms share the label " + to_string(t.label));
        std::optional<Rat> m = support_min(t.coefficient, to_qvec(u));
        if (!m)
            throw precondition_error("UnboundedEvaluation",
                                     "support minimum over " + to_string(t.label) + " is unbounded below");
        out.coefficients[t.label] = *m;
    }
    return out;
}

// a divisor label together with its defining plane curve
struct PlaneCurve {
    DivisorLabel label;
    Poly poly;
};

namespace detail {

// reject visibly reducible curves; complete for total degree <= 3, for
// higher degree only rational lines can be detected
inline void validate_plane_curves(const std::vector<PlaneCurve>& curves) {
    for (const PlaneCurve& c : curves) {
        if (c.poly.nvars != 2)
            throw precondition_error("DimensionMismatch", "curve polynomials live in two variables");
        if (is_zero(c.poly) || total_degree(c.poly) == 0)
            throw precondition_error("NotIrreducible", to_string(c.label) + " is not defined by a curve");
        if (total_degree(c.poly) >= 2 && has_linear_factor(c.poly))
            throw precondition_error("NotIrreducible", to_string(c.label) + " contains a line");
    }
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j)
            if (!coprime_bivariate(curves[i].poly, curves[j].poly))
                throw precondition_error("NotCoprime", to_string(curves[i].label) + " and " +
                                                           to_string(curves[j].label) + " share a component");
}

}  // namespace detail

struct GradedPiece {
    IVec u;
    std::vector<std::pair<Poly, Int>> generator;  // curve with nonzero integer exponent
    std::string structure;
};

// sections of D over the plane: floor the coefficients, invert the signs
inline GradedPiece sections_plane(const QDivisor& d, const std::vector<PlaneCurve>& curves,
                                  const IVec& u = {}) {
    detail::validate_plane_curves(curves);
    for (const auto& [label, coef] : d.coefficients) {
        if (coef == 0) continue;
        bool known = false;
        for (const PlaneCurve& c : curves) known |= (c.label == label);
        if (!known)
            throw precondition_error("MissingCurve", to_string(label) + " carries no defining polynomial");
    }
    GradedPiece out{u, {}, "generator * Q[u,v]"};
    for (const PlaneCurve& c : curves) {
        Int m = -rat_floor(coefficient_of(d, c.label));
        if (m != 0) out.generator.push_back({c.poly, m});
    }
    return out;
}

struct AlgebraPresentation {
    std::vector<std::pair<std::string, IVec>> generators;  // name with weight
    std::vector<Poly> relations;                           // variables u, v, x1, x2, x3, x4
    int degree_bound = 0;
};

namespace detail {

// unit lattice segment along a coordinate axis; returns the axis
inline size_t segment_axis(const Polyhedron& delta) {
    if (delta.is_empty() || !delta.rays.empty() || delta.vertices.size() != 2)
        throw precondition_error("UnsupportedShape", "coefficient is not a bounded segment");
    for (const QVec& v : delta.vertices)
        for (const Rat& x : v)
            if (denominator(x) != 1)
                throw precondition_error("UnsupportedShape", "segment endpoints are not lattice points");
    QVec diff = sub(delta.vertices[1], delta.vertices[0]);
    std::optional<size_t> axis;
    for (size_t i = 0; i < diff.size(); ++i) {
        if (diff[i] == 0) continue;
        if (axis || (diff[i] != 1 && diff[i] != -1))
            throw precondition_error("UnsupportedShape", "segment is not a unit coordinate step");
        axis = i;
    }
    if (!axis) throw precondition_error("UnsupportedShape", "coefficient degenerates to a point");
    return *axis;
}

// exponent of one curve inside a graded piece generator
inline Int generator_exponent(const GradedPiece& piece, const Poly& curve) {
    for (const auto& [f, m] : piece.generator)
        if (f == curve) return m;
    return 0;
}

}  // namespace detail

// Reconstruct the bounded presentation of the section algebra for the
// two-unit-segment pattern: generators sit in weights +-e1, +-e2 and the
// relations pair opposite weights against the defining curves.
inline AlgebraPresentation presentation_bounded(const AHPresentation& pres, const Poly& f1,
                                                const Poly& f2, int weight_bound) {
    if (pres.lattice_rank != 2 || pres.terms.size() != 2)
        throw precondition_error("UnsupportedShape", "expected exactly two terms over a rank-two lattice");
    if (!pres.tail.generators.empty())
        throw precondition_error("UnsupportedShape", "nontrivial tail cone");
    if (weight_bound < 1)
        throw precondition_error("UnsupportedShape", "weight bound excludes the generator weights");
    std::vector<PlaneCurve> curves{{pres.terms[0].label, f1}, {pres.terms[1].label, f2}};
    detail::validate_plane_curves(curves);
    if (detail::segment_axis(pres.terms[0].coefficient) != 0 ||
        detail::segment_axis(pres.terms[1].coefficient) != 1)
        throw precondition_error("UnsupportedShape",
                                 "segments must step along e1 for the first term and e2 for the second");

    // read the generator of each weight +-e_i off its graded piece and
    // multiply opposite pairs; the product must recover the curve itself
    std::vector<Poly> relations;
    for (size_t axis = 0; axis < 2; ++axis) {
        IVec e(2, Int(0));
        e[axis] = 1;
        IVec eneg(2, Int(0));
        eneg[axis] = -1;
        GradedPiece plus = sections_plane(evaluate(pres, e), curves, e);
        GradedPiece minus = sections_plane(evaluate(pres, eneg), curves, eneg);
        for (size_t c = 0; c < 2; ++c) {
            Int total = detail::generator_exponent(plus, curves[c].poly) +
                        detail::generator_exponent(minus, curves[c].poly);
            if (total != (c == axis ? 1 : 0))
                throw precondition_error("UnsupportedShape", "generator products do not close on the curves");
        }
        // x_{2axis+1} x_{2axis+2} - f_{axis+1} in Q[u, v, x1..x4]
        std::vector<int> exps(6, 0);
        exps[2 + 2 * axis] = 1;
        exps[3 + 2 * axis] = 1;
        Poly rel = poly_monomial(6, exps, Rat(1));
        Poly lifted = substitute(axis == 0 ? f1 : f2, {poly_var(6, 0), poly_var(6, 1)});
        relations.push_back(sub(rel, lifted));
    }

    AlgebraPresentation out;
    out.generators = {{"x1", IVec{1, 0}}, {"x2", IVec{-1, 0}}, {"x3", IVec{0, 1}}, {"x4", IVec{0, -1}}};
    out.relations = std::move(relations);
    out.degree_bound = weight_bound;
    return out;
}

struct InvariantGenerators {
    std::vector<IVec> generators;  // ascending total degree, then lexicographic
    bool bound_warning = false;    // set when the basis is provably incomplete
};

// Hilbert basis elements of {m >= 0 : F^T m = 0} within the degree bound.
// The warning fires only when an extreme ray of the solution cone needs a
// higher degree; its absence is not a completeness proof.
inline InvariantGenerators invariant_ring_generators(const IntMatrix& f, int total_degree_bound) {
    if (total_degree_bound < 0)
        throw precondition_error("NegativeBound", "degree bound must be nonnegative");
    size_t n = f.rows(), k = f.cols();
    std::vector<IVec> sols;
    IVec current(n, Int(0));
    auto weight_ok = [&]() {
        for (size_t j = 0; j < k; ++j) {
            Int w = 0;
            for (size_t i = 0; i < n; ++i) w += current[i] * f(i, j);
            if (w != 0) return false;
        }
        return true;
    };
    auto enumerate = [&](auto&& self, size_t pos, int left) -> void {
        if (pos == n) {
            if (weight_ok() && !is_zero(current)) sols.push_back(current);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            current[pos] = v;
            self(self, pos + 1, left - v);
        }
        current[pos] = 0;
    };
    enumerate(enumerate, 0, total_degree_bound);
    auto degree = [](const IVec& m) {
        Int d = 0;
        for (const Int& x : m) d += x;
        return d;
    };
    std::sort(sols.begin(), sols.end(), [&](const IVec& a, const IVec& b) {
        Int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    InvariantGenerators out;
    for (const IVec& m : sols) {
        bool reducible = false;
        for (const IVec& b : out.generators) {
            bool leq = true;
            for (size_t i = 0; i < n; ++i) leq &= (b[i] <= m[i]);
            if (leq && b != m) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.generators.push_back(m);
    }
    // extreme rays of the rational solution cone must be reachable
    std::vector<LinCond> eqs, ineqs;
    for (size_t j = 0; j < k; ++j) {
        QVec row(n);
        for (size_t i = 0; i < n; ++i) row[i] = Rat(f(i, j));
        eqs.push_back({std::move(row), Rat(0)});
    }
    for (size_t i = 0; i < n; ++i) {
        QVec row(n, Rat(0));
        row[i] = 1;
        ineqs.push_back({std::move(row), Rat(0)});
    }
    Polyhedron cone = vertex_enumeration(n, eqs, ineqs);
    for (const IVec& ray : cone.rays) {
        Int d = 0;
        for (const Int& x : ray) d += x;
        if (d > total_degree_bound) out.bound_warning = true;
    }
    return out;
}

// weight of a T-homogeneous polynomial in the ambient coordinates
inline IVec check_equivariant_hypersurface(const IntMatrix& f, const Poly& g) {
    if (is_zero(g)) throw precondition_error("ZeroVector", "the zero polynomial has no weight");
    if (g.nvars != f.rows())
        throw precondition_error("DimensionMismatch", "one ambient coordinate per weight row required");
    size_t k = f.cols();
    auto weight_of = [&](const std::vector<int>& e) {
        IVec w(k, Int(0));
        for (size_t i = 0; i < f.rows(); ++i)
            for (size_t j = 0; j < k; ++j) w[j] += Int(e[i]) * f(i, j);
        return w;
    };
    auto exps_str = [](const std::vector<int>& e) {
        std::string s = "(";
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[i]);
        }
        return s + ")";
    };
    auto it = g.terms.begin();
    IVec w = weight_of(it->first);
    std::string bad;
    for (++it; it != g.terms.end(); ++it) {
        IVec wi = weight_of(it->first);
        if (wi != w) bad += " " + exps_str(it->first) + " has weight " + to_string(wi) + ";";
    }
    if (!bad.empty())
        throw precondition_error("NotHomogeneous", "monomial " + exps_str(g.terms.begin()->first) +
                                                       " has weight " + to_string(w) + " but" + bad);
    return w;
}

}  // namespace tvar
