#pragma once

// Two-dimensional fans: counterclockwise ray order by exact cross products,
// the coarsest refinement of a ray set, and the blow-up bookkeeping read
// off a refined fan.

#include <algorithm>
#include <vector>

#include "tvar/numeric.hpp"

namespace tvar {

struct Fan2D {
    std::vector<IVec> rays;                          // primitive, ccw sorted
    std::vector<std::pair<size_t, size_t>> cones;    // consecutive ray pairs
};

struct SurfaceInfo {
    Int quotient_order;                 // |det| of the two extreme rays
    std::vector<IVec> boundary_rays;    // the two extreme rays, ccw order
    std::vector<IVec> exceptional_rays; // interior rays, ccw order
    std::vector<Int> smooth_flags;      // |det| per maximal cone
};

namespace detail {

inline Int cross2(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace detail

// Fan whose rays are exactly the distinct primitive input directions and
// whose maximal cones are the consecutive pairs: the coarsest common
// refinement of the cones spanned by the inputs.
inline Fan2D coarsest_refinement(const std::vector<IVec>& input) {
    std::vector<IVec> rays;
    for (const IVec& r : input) {
        if (r.size() != 2)
            throw precondition_error("DimensionMismatch", "rays must be 2-vectors");
        if (is_zero(r)) throw precondition_error("ZeroVector", "zero ray");
        rays.push_back(primitive(r));
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    if (rays.size() < 2)
        throw precondition_error("FewerThanTwoRays", "need at least two distinct ray directions");

    // extreme pair: all rays strictly inside the positively oriented cone
    size_t lo = rays.size(), hi = rays.size();
    for (size_t i = 0; i < rays.size() && lo == rays.size(); ++i)
        for (size_t j = 0; j < rays.size(); ++j) {
            if (i == j || detail::cross2(rays[i], rays[j]) <= 0) continue;
            bool all_inside = true;
            for (size_t t = 0; t < rays.size() && all_inside; ++t) {
                if (t == i || t == j) continue;
                if (detail::cross2(rays[i], rays[t]) <= 0 || detail::cross2(rays[t], rays[j]) <= 0)
                    all_inside = false;
            }
            if (all_inside) { lo = i; hi = j; break; }
        }
    if (lo == rays.size())
        throw precondition_error("NotStronglyConvex", "rays do not fit in a strongly convex cone");

    // ccw sort anchored at the extreme ray; cross product is a total order
    // inside a strongly convex cone
    std::sort(rays.begin(), rays.end(), [&](const IVec& a, const IVec& b) {
        return detail::cross2(a, b) > 0;
    });
    Fan2D fan;
    fan.rays = std::move(rays);
    for (size_t i = 0; i + 1 < fan.rays.size(); ++i) fan.cones.emplace_back(i, i + 1);
    return fan;
}

// Blow-up structure: extreme rays bound the quotient cone, interior rays
// are exceptional, the extreme-pair determinant is the cyclic group order.
inline SurfaceInfo surface_info(const Fan2D& fan) {
    if (fan.rays.size() < 2)
        throw precondition_error("FewerThanTwoRays", "fan must have at least two rays");
    SurfaceInfo info;
    info.boundary_rays = {fan.rays.front(), fan.rays.back()};
    for (size_t i = 1; i + 1 < fan.rays.size(); ++i) info.exceptional_rays.push_back(fan.rays[i]);
    info.quotient_order = abs(detail::cross2(fan.rays.front(), fan.rays.back()));
    for (const auto& [i, j] : fan.cones)
        info.smooth_flags.push_back(abs(detail::cross2(fan.rays[i], fan.rays[j])));
    return info;
}

}  // namespace tvar
