#pragma once

// The split exact sequence behind every presentation: a weight matrix F
// with a lattice surjection P onto its cokernel and a section s of F.

#include "tvar/matrix.hpp"

namespace tvar {

struct ExactSequenceData {
    IntMatrix f;  // n x k, row i = weight of coordinate i
    IntMatrix p;  // (n-k) x n, P*F = 0, surjective
    IntMatrix s;  // k x n, s*F = identity
};

namespace detail {

// Rejects F unless it has full column rank and unit invariant factors.
inline SmithForm checked_smith(const IntMatrix& f) {
    SmithForm sf = smith_normal_form(f);
    size_t k = f.cols();
    for (size_t i = 0; i < k; ++i) {
        if (sf.s(i, i) == 0)
            throw precondition_error("RankDeficient", "weight matrix has rank below its column count");
        if (sf.s(i, i) != 1)
            throw precondition_error("TorsionCokernel", "cokernel of the weight matrix has torsion");
    }
    return sf;
}

}  // namespace detail

// Canonical basis for the saturated orthogonal complement of the columns
// of F: with U*F*V = [I|0]^T the last n-k rows of U span ker(F^T), and
// Hermite reduction makes the choice of basis canonical.
inline IntMatrix cokernel_map(const IntMatrix& f) {
    SmithForm sf = detail::checked_smith(f);
    size_t n = f.rows(), k = f.cols();
    IntMatrix p(n - k, n);
    for (size_t i = k; i < n; ++i)
        for (size_t j = 0; j < n; ++j) p(i - k, j) = sf.u(i, j);
    return hermite_normal_form(p);
}

// A right inverse of F: s = V * [I_k | 0] * U, so s*F = V*V^{-1} = I.
inline IntMatrix section(const IntMatrix& f) {
    SmithForm sf = detail::checked_smith(f);
    size_t n = f.rows(), k = f.cols();
    IntMatrix top(k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) top(i, j) = sf.u(i, j);
    return sf.v * top;
}

inline ExactSequenceData exact_sequence(const IntMatrix& f) {
    return ExactSequenceData{f, cokernel_map(f), section(f)};
}

// Checks the defining identities of a presentation triple.
inline void validate_exact_sequence(const ExactSequenceData& d) {
    size_t n = d.f.rows(), k = d.f.cols();
    if (d.p.rows() != n - k || d.p.cols() != n || d.s.rows() != k || d.s.cols() != n)
        throw precondition_error("DimensionMismatch", "exact sequence shapes are inconsistent");
    if (!(d.p * d.f).is_zero())
        throw precondition_error("NotComplex", "P*F is not zero");
    if (d.s * d.f != IntMatrix::identity(k))
        throw precondition_error("NotSection", "s*F is not the identity");
    SmithForm sp = smith_normal_form(d.p);
    for (size_t i = 0; i < d.p.rows(); ++i)
        if (sp.s(i, i) != 1)
            throw precondition_error("NotSurjective", "P is not a lattice surjection");
}

}  // namespace tvar
