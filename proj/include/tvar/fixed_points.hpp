#pragma once

// Which divisor terms carry fixed points of a one-dimensional subtorus:
// the coefficient polyhedron must have positive width along the direction.
// A weight-pairing oracle on the ambient linear action cross-checks this.

#include <map>
#include <set>
#include <vector>

#include "tvar/presentation.hpp"

namespace tvar {

// primitive direction, sign-normalized so l and -l coincide
struct SubtorusDirection {
    IVec l;

    bool operator==(const SubtorusDirection& o) const { return l == o.l; }
};

inline SubtorusDirection subtorus_direction(const IVec& raw) {
    if (is_zero(raw))
        throw precondition_error("ZeroVector", "subtorus direction must be nonzero");
    IVec p = primitive(raw);
    for (const Int& x : p) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : p) y = -y;
        break;
    }
    return SubtorusDirection{p};
}

enum class Isotropy { finite, infinite };

struct FixedLocusReport {
    SubtorusDirection direction;
    std::vector<DivisorLabel> fixed_labels;        // fan order
    std::map<DivisorLabel, Isotropy> isotropy;

    bool operator==(const FixedLocusReport& o) const {
        return direction == o.direction && fixed_labels == o.fixed_labels && isotropy == o.isotropy;
    }
};

// A term is fixed when its coefficient polyhedron extends in direction l;
// the generic isotropy over such a term is infinite, finite elsewhere.
inline FixedLocusReport fixed_components(const AHPresentation& pres, const SubtorusDirection& dir) {
    if (dir.l.size() != pres.lattice_rank)
        throw precondition_error("DimensionMismatch", "direction length must match the lattice rank");
    FixedLocusReport out;
    out.direction = dir;
    for (const PresentationTerm& t : pres.terms) {
        bool fixed = line_slice_positive_length(t.coefficient, to_qvec(dir.l));
        if (out.isotropy.count(t.label))
            throw precondition_error("DuplicateLabel", "presentation repeats a divisor label");
        out.isotropy[t.label] = fixed ? Isotropy::infinite : Isotropy::finite;
        if (fixed) out.fixed_labels.push_back(t.label);
    }
    return out;
}

// Fixed subspace of t -> diag(t^<row_i, l>) acting on coordinates: the
// indices whose weight pairing vanishes survive, all others are pinned to 0.
inline std::vector<size_t> oracle_fixed_points_linear(const IntMatrix& f, const SubtorusDirection& dir) {
    if (f.cols() != dir.l.size())
        throw precondition_error("DimensionMismatch", "direction length must match the weight columns");
    std::vector<size_t> out;
    for (size_t i = 0; i < f.rows(); ++i) {
        Int pairing = 0;
        for (size_t j = 0; j < f.cols(); ++j) pairing += f(i, j) * dir.l[j];
        if (pairing == 0) out.push_back(i);
    }
    return out;
}

namespace detail {

inline void direction_box(size_t k, const Int& bound, IVec& cur, std::set<IVec>& out) {
    if (cur.size() == k) {
        if (!is_zero(cur)) out.insert(subtorus_direction(cur).l);
        return;
    }
    for (Int v = -bound; v <= bound; ++v) {
        cur.push_back(v);
        direction_box(k, bound, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// One report per primitive direction with max-norm <= height_bound, taking
// l and -l together, in lexicographic order of the normalized direction.
inline std::vector<FixedLocusReport> fixed_locus_survey(const AHPresentation& pres, int height_bound) {
    if (height_bound < 1)
        throw precondition_error("HeightBoundTooSmall", "height bound must be at least 1");
    std::set<IVec> dirs;
    IVec cur;
    detail::direction_box(pres.lattice_rank, Int(height_bound), cur, dirs);
    std::vector<FixedLocusReport> out;
    for (const IVec& l : dirs) out.push_back(fixed_components(pres, SubtorusDirection{l}));
    return out;
}

}  // namespace tvar
