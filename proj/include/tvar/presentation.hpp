#pragma once

// End-to-end pipeline: weight matrix -> exact sequence -> ray directions ->
// fan and surface -> polyhedral coefficient per divisor, plus the
// shift-equivalence relation that absorbs the non-canonical section choice.

#include <optional>
#include <string>
#include <vector>

#include "tvar/fan2d.hpp"
#include "tvar/lattice.hpp"
#include "tvar/polyhedron.hpp"

namespace tvar {

struct DivisorLabel {
    enum class Kind { strict_transform_axis, exceptional, named_curve };
    Kind kind = Kind::strict_transform_axis;
    int index = 0;       // axis number (1|2) or exceptional index (1-based)
    std::string curve;   // defining polynomial, named_curve only

    bool operator==(const DivisorLabel& o) const {
        return kind == o.kind && index == o.index && curve == o.curve;
    }
};

inline DivisorLabel axis_label(int i) {
    return {DivisorLabel::Kind::strict_transform_axis, i, ""};
}
inline DivisorLabel exceptional_label(int i) {
    return {DivisorLabel::Kind::exceptional, i, ""};
}
inline DivisorLabel curve_label(const std::string& poly) {
    return {DivisorLabel::Kind::named_curve, 0, poly};
}

// ordering so labels can key maps
inline bool operator<(const DivisorLabel& a, const DivisorLabel& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.index != b.index) return a.index < b.index;
    return a.curve < b.curve;
}

inline std::string to_string(const DivisorLabel& l) {
    switch (l.kind) {
        case DivisorLabel::Kind::strict_transform_axis: return "H" + std::to_string(l.index);
        case DivisorLabel::Kind::exceptional: return "E" + std::to_string(l.index);
        default: return "{" + l.curve + "=0}";
    }
}

struct PresentationTerm {
    DivisorLabel label;
    IVec ray;               // primitive direction in the quotient fan
    size_t multiplicity;    // columns of P mapping to this direction
    Polyhedron coefficient; // polyhedron in the k-dimensional lattice
};

struct AHPresentation {
    size_t lattice_rank = 0;
    ExactSequenceData data;
    SurfaceInfo surface;
    std::vector<PresentationTerm> terms;  // ccw fan order
    Cone tail;
};

// sigma = {0}: no nonzero point of the weight cone image meets the
// nonnegative orthant.  One exact LP feasibility question.
inline bool fully_hyperbolic_check(const IntMatrix& f) {
    size_t n = f.rows(), k = f.cols();
    // exists a with F a >= 0 and sum(F a) >= 1?
    std::vector<QVec> ineq;
    QVec rhs;
    for (size_t i = 0; i < n; ++i) {
        QVec row(k);
        for (size_t j = 0; j < k; ++j) row[j] = Rat(f(i, j));
        ineq.push_back(std::move(row));
        rhs.push_back(Rat(0));
    }
    QVec total(k, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) total[j] += Rat(f(i, j));
    ineq.push_back(std::move(total));
    rhs.push_back(Rat(1));
    return !lp_feasible(k, ineq, rhs);
}

// Coefficient polyhedron of one ray: Delta_v = s({x >= 0} cap {Px = v}).
inline Polyhedron ray_coefficient(const ExactSequenceData& d, const IVec& v) {
    size_t n = d.f.rows();
    std::vector<LinCond> eqs;
    for (size_t r = 0; r < d.p.rows(); ++r) {
        QVec row(n);
        for (size_t j = 0; j < n; ++j) row[j] = Rat(d.p(r, j));
        eqs.push_back({std::move(row), Rat(v[r])});
    }
    std::vector<LinCond> ineqs;
    for (size_t j = 0; j < n; ++j) {
        QVec row(n, Rat(0));
        row[j] = 1;
        ineqs.push_back({std::move(row), Rat(0)});
    }
    return linear_image(d.s, vertex_enumeration(n, eqs, ineqs));
}

// Pipeline from explicitly given exact-sequence data (P and s need not be
// the canonical ones; they are validated instead).
inline AHPresentation ah_presentation(const ExactSequenceData& d) {
    size_t n = d.f.rows(), k = d.f.cols();
    if (!fully_hyperbolic_check(d.f))
        throw precondition_error("NotFullyHyperbolic", "weight cone meets the positive orthant");
    if (n != k + 2)
        throw precondition_error("CodimensionNotTwo", "pipeline requires n - k = 2");
    validate_exact_sequence(d);

    AHPresentation pres;
    pres.lattice_rank = k;
    pres.data = d;
    pres.tail = Cone{k, {}};

    std::vector<IVec> dirs;
    for (size_t j = 0; j < n; ++j) dirs.push_back(primitive(d.p.col(j)));
    Fan2D fan = coarsest_refinement(dirs);
    pres.surface = surface_info(fan);

    for (size_t i = 0; i < fan.rays.size(); ++i) {
        PresentationTerm term;
        term.ray = fan.rays[i];
        term.multiplicity = 0;
        for (const IVec& dir : dirs)
            if (dir == term.ray) ++term.multiplicity;
        if (i == 0) term.label = axis_label(1);
        else if (i + 1 == fan.rays.size()) term.label = axis_label(2);
        else term.label = exceptional_label(static_cast<int>(i));
        term.coefficient = ray_coefficient(d, term.ray);
        pres.terms.push_back(std::move(term));
    }
    return pres;
}

inline AHPresentation ah_presentation(const IntMatrix& f) {
    return ah_presentation(exact_sequence(f));
}

namespace detail {

inline Polyhedron negate(const Polyhedron& p) {
    Polyhedron out = p;
    for (QVec& v : out.vertices)
        for (Rat& x : v) x = -x;
    for (IVec& r : out.rays)
        for (Int& x : r) x = -x;
    return canonicalize(out);
}

inline Polyhedron translate(const Polyhedron& p, const QVec& c) {
    Polyhedron out = p;
    for (QVec& v : out.vertices) v = add(v, c);
    return canonicalize(out);
}

// c with b = a + c, if any: translates are detected via lexmin vertices.
inline std::optional<QVec> translate_between(const Polyhedron& a, const Polyhedron& b) {
    if (a.is_empty() || b.is_empty() || a.vertices.size() != b.vertices.size()) return std::nullopt;
    QVec c = sub(b.vertices[0], a.vertices[0]);
    if (translate(a, c) == b) return c;
    return std::nullopt;
}

}  // namespace detail

// True when an integer linear map t and a global sign make the coefficient
// systems agree: eps * B_v = A_v + t(v) for every ray v at once.
inline bool shift_equivalent(const AHPresentation& a, const AHPresentation& b) {
    if (a.lattice_rank != b.lattice_rank || a.terms.size() != b.terms.size())
        throw precondition_error("StructureMismatch", "presentations have different shapes");
    size_t k = a.lattice_rank;
    size_t m = a.terms.size();
    for (size_t i = 0; i < m; ++i) {
        if (!(a.terms[i].ray == b.terms[i].ray) || !(a.terms[i].label == b.terms[i].label))
            throw precondition_error("StructureMismatch", "ray or label mismatch between presentations");
    }
    for (int eps : {1, -1}) {
        std::vector<QVec> shift(m);
        bool ok = true;
        for (size_t i = 0; i < m && ok; ++i) {
            Polyhedron target = eps == 1 ? b.terms[i].coefficient : detail::negate(b.terms[i].coefficient);
            auto c = detail::translate_between(a.terms[i].coefficient, target);
            if (!c) ok = false;
            else shift[i] = *c;
        }
        if (!ok) continue;
        // solve t from the two boundary rays, which are linearly independent
        const IVec& v1 = a.terms.front().ray;
        const IVec& v2 = a.terms.back().ray;
        Rat det = Rat(v1[0] * v2[1] - v1[1] * v2[0]);
        if (det == 0)
            throw precondition_error("StructureMismatch", "boundary rays are collinear");
        bool integral = true;
        std::vector<QVec> t(k, QVec(2));  // t row r = row of the k x 2 map
        for (size_t r = 0; r < k && integral; ++r) {
            // [t_r1 t_r2] * [v1 v2] = [shift_front_r shift_back_r]
            Rat c1 = shift.front()[r], c2 = shift.back()[r];
            Rat t1 = (c1 * Rat(v2[1]) - c2 * Rat(v1[1])) / det;
            Rat t2 = (c2 * Rat(v1[0]) - c1 * Rat(v2[0])) / det;
            if (denominator(t1) != 1 || denominator(t2) != 1) integral = false;
            t[r] = {t1, t2};
        }
        if (!integral) continue;
        bool all = true;
        for (size_t i = 0; i < m && all; ++i) {
            const IVec& v = a.terms[i].ray;
            for (size_t r = 0; r < k && all; ++r)
                if (t[r][0] * Rat(v[0]) + t[r][1] * Rat(v[1]) != shift[i][r]) all = false;
        }
        if (all) return true;
    }
    return false;
}

}  // namespace tvar
