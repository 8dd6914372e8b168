#pragma once

// Classification-facing checks: normal crossings of plane curves, cyclic
// group invariance, parametrized-line certificates, product splittings of
// the weight data, and the linearization rule chain on a presentation.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tvar/polynomial.hpp"
#include "tvar/presentation.hpp"

namespace tvar {

enum class TriBool { no, yes, undecided };

// plane curve f = 0, optionally with a polynomial parametrization t -> (p, q)
struct CurveSpec {
    Poly f;
    std::optional<std::pair<Poly, Poly>> parametrization;
};

namespace detail {

inline void validate_curve(const CurveSpec& c) {
    if (c.f.nvars != 2)
        throw precondition_error("DimensionMismatch", "curve polynomial must have two variables");
    if (is_zero(c.f))
        throw precondition_error("ZeroPolynomial", "curve polynomial must be nonzero");
    if (c.parametrization) {
        const Poly& p = c.parametrization->first;
        const Poly& q = c.parametrization->second;
        if (p.nvars != 1 || q.nvars != 1)
            throw precondition_error("DimensionMismatch", "parametrization must be univariate");
        if (!is_zero(substitute(c.f, {p, q})))
            throw precondition_error("ParametrizationMismatch", "curve does not contain the image");
    }
}

}  // namespace detail

inline CurveSpec curve_spec(const Poly& f) {
    CurveSpec c{f, std::nullopt};
    detail::validate_curve(c);
    return c;
}

inline CurveSpec curve_spec(const Poly& f, const Poly& p, const Poly& q) {
    CurveSpec c{f, std::make_pair(p, q)};
    detail::validate_curve(c);
    return c;
}

// cyclic group of the given order acting diagonally with the given weights
struct MuAction {
    Int order = 1;
    Int a = 0;
    Int b = 0;
};

// reduce the weights mod the order, then divide out the common kernel so
// the stored representative acts faithfully
inline MuAction mu_action(const Int& k, const Int& a, const Int& b) {
    if (k < 1) throw precondition_error("OrderNotPositive", "group order must be at least 1");
    Int ra = ((a % k) + k) % k;
    Int rb = ((b % k) + k) % k;
    Int g = gcd(gcd(ra, rb), k);
    return {k / g, ra / g, rb / g};
}

struct SncReport {
    std::vector<QVec> points;   // rational common zeros, lexicographically sorted
    TriBool all_transverse = TriBool::yes;
};

// Rational intersection points via elimination: roots of Res_v give the u
// coordinates, the gcd of the two specializations gives the v coordinates.
// Transversality at a point is a nonzero Jacobian determinant, which also
// forces both gradients to be nonzero.  Irrational residue anywhere keeps
// the verdict undecided rather than approximated.
inline SncReport snc_check(const CurveSpec& c1, const CurveSpec& c2) {
    detail::validate_curve(c1);
    detail::validate_curve(c2);
    if (!coprime_bivariate(c1.f, c2.f))
        throw precondition_error("NotCoprime", "curves share a component");

    RationalRoots ur = rational_roots(resultant_v(c1.f, c2.f));
    bool residual = ur.residual_degree > 0;
    SncReport out;
    bool all = true;
    Poly du1 = derivative(c1.f, 0), dv1 = derivative(c1.f, 1);
    Poly du2 = derivative(c2.f, 0), dv2 = derivative(c2.f, 1);
    for (const auto& [u0, umult] : ur.roots) {
        std::vector<Poly> section = {poly_const(1, u0), poly_var(1, 0)};
        UPoly g1 = up_from(substitute(c1.f, section), 0);
        UPoly g2 = up_from(substitute(c2.f, section), 0);
        UPoly g = up_is_zero(g1) ? g2 : up_is_zero(g2) ? g1 : up_gcd(g1, g2);
        if (up_deg(g) < 1) continue;  // leading coefficients vanished, no affine point here
        RationalRoots vr = rational_roots(g);
        if (vr.residual_degree > 0) residual = true;
        for (const auto& [v0, vmult] : vr.roots) {
            QVec pt{u0, v0};
            Rat det = evaluate(du1, pt) * evaluate(dv2, pt) - evaluate(dv1, pt) * evaluate(du2, pt);
            if (det == 0) all = false;
            out.points.push_back(std::move(pt));
        }
    }
    std::sort(out.points.begin(), out.points.end());
    out.all_transverse = !all ? TriBool::no : residual ? TriBool::undecided : TriBool::yes;
    return out;
}

struct MuInvariance {
    bool invariant = false;        // all monomials share one weight residue
    bool contains_origin = false;  // constant term vanishes
};

inline MuInvariance mu_invariance_check(const CurveSpec& c, const MuAction& mu) {
    detail::validate_curve(c);
    std::optional<Int> common;
    bool ok = true;
    for (const auto& [e, coef] : c.f.terms) {
        Int r = ((mu.a * e[0] + mu.b * e[1]) % mu.order + mu.order) % mu.order;
        if (!common) common = r;
        else if (*common != r) ok = false;
    }
    return {ok, c.f.terms.find(std::vector<int>{0, 0}) == c.f.terms.end()};
}

namespace detail {

// (p(t) - p(s)) / (t - s) as a polynomial in t, s
inline Poly divided_difference(const Poly& p) {
    UPoly c = up_from(p, 0);
    Poly out = poly_zero(2);
    for (size_t i = 1; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < i; ++j)
            out = add(out, poly_monomial(2, {static_cast<int>(j), static_cast<int>(i - 1 - j)}, c[i]));
    }
    return out;
}

}  // namespace detail

// Certificate that the parametrized curve is a polynomial line: the image
// is contained in the curve, the crosswise degrees match a proper
// parametrization (deg p = deg_v f, deg q = deg_u f), and the divided
// differences are coprime.  The coprimality test is generic, so isolated
// double points of a degree-matching parametrization escape it.
inline TriBool a1_check(const CurveSpec& c) {
    detail::validate_curve(c);
    if (!c.parametrization) return TriBool::undecided;
    const Poly& p = c.parametrization->first;
    const Poly& q = c.parametrization->second;
    if (!is_zero(substitute(c.f, {p, q})))
        throw precondition_error("ParametrizationMismatch", "curve does not contain the image");
    if (total_degree(p) != degree_in(c.f, 1) || total_degree(q) != degree_in(c.f, 0))
        return TriBool::undecided;
    Poly dp = detail::divided_difference(p);
    Poly dq = detail::divided_difference(q);
    if (is_zero(dp) && is_zero(dq)) return TriBool::no;
    if (is_zero(dp)) return total_degree(dq) == 0 ? TriBool::yes : TriBool::no;
    if (is_zero(dq)) return total_degree(dp) == 0 ? TriBool::yes : TriBool::no;
    return coprime_bivariate(dp, dq) ? TriBool::yes : TriBool::no;
}

// Partition of the coordinates by ray direction when the quotient fan has
// exactly two rays; the saturated cokernel then makes the two directions a
// lattice basis, so the weight data splits into two blocks.  Three or more
// directions mean no split.  Indices are 1-based.
inline std::optional<std::pair<std::vector<size_t>, std::vector<size_t>>>
product_split(const IntMatrix& f) {
    size_t n = f.rows(), k = f.cols();
    if (!fully_hyperbolic_check(f))
        throw precondition_error("NotFullyHyperbolic", "weight cone meets the positive orthant");
    if (n != k + 2)
        throw precondition_error("CodimensionNotTwo", "product split requires n - k = 2");
    IntMatrix p = cokernel_map(f);
    std::vector<IVec> dirs;
    for (size_t j = 0; j < n; ++j) dirs.push_back(primitive(p.col(j)));
    const IVec& v1 = dirs[0];
    const IVec* v2 = nullptr;
    for (const IVec& d : dirs) {
        if (d == v1) continue;
        if (!v2) v2 = &d;
        else if (!(d == *v2)) return std::nullopt;
    }
    if (!v2) return std::nullopt;  // a surjective two-row map never has one direction
    std::pair<std::vector<size_t>, std::vector<size_t>> out;
    for (size_t j = 0; j < n; ++j)
        (dirs[j] == v1 ? out.first : out.second).push_back(j + 1);
    return out;
}

enum class Outcome { linear, product_of_complexity_one, bi_cyclic_cover, cyclic_cover, undecided };

struct Verdict {
    Outcome outcome = Outcome::undecided;
    std::vector<std::string> evidence;
};

// Rule chain on the two curve terms: both coefficients of positive
// dimension give the linear case, one point gives a cyclic cover, two
// points give a bi-cyclic cover.  Exceptional terms do not participate.
inline Verdict linearization_verdict(const AHPresentation& pres) {
    const Polyhedron* d1 = nullptr;
    const Polyhedron* d2 = nullptr;
    for (const PresentationTerm& t : pres.terms) {
        if (t.label.kind != DivisorLabel::Kind::strict_transform_axis) continue;
        if (t.label.index != 1 && t.label.index != 2)
            throw precondition_error("UnsupportedShape", "unexpected curve term index");
        const Polyhedron*& slot = t.label.index == 1 ? d1 : d2;
        if (slot)
            throw precondition_error("UnsupportedShape", "duplicate curve term");
        slot = &t.coefficient;
    }
    if (!d1 || !d2)
        throw precondition_error("UnsupportedShape", "two curve terms required");
    if (d1->is_empty() || d2->is_empty())
        throw precondition_error("UnsupportedShape", "curve coefficients must be nonempty");

    std::vector<QVec> s1 = minimal_subspace(*d1);
    std::vector<QVec> s2 = minimal_subspace(*d2);
    Verdict out;
    if (!s1.empty() && !s2.empty()) {
        out.outcome = Outcome::linear;
        out.evidence.push_back("both coefficients extend in positive dimension");
        std::vector<QVec> joint = s1;
        joint.insert(joint.end(), s2.begin(), s2.end());
        size_t meet = s1.size() + s2.size() - rref(joint).size();
        out.evidence.push_back(meet == 0 ? "direction spans meet only at the origin"
                                         : "direction spans share a common line");
    } else if (s1.empty() && s2.empty()) {
        out.outcome = Outcome::bi_cyclic_cover;
        out.evidence.push_back("both coefficients are single points");
    } else {
        out.outcome = Outcome::cyclic_cover;
        out.evidence.push_back(s1.empty() ? "first coefficient is a single point"
                                          : "second coefficient is a single point");
    }
    return out;
}

}  // namespace tvar
