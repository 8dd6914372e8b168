#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "tvar/fan2d.hpp"

using namespace tvar;

TEST_CASE("refinement collapses repeated axes") {
    Fan2D fan = coarsest_refinement({{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    CHECK(fan.rays == std::vector<IVec>{{1, 0}, {0, 1}});
    REQUIRE(fan.cones.size() == 1);
    SurfaceInfo info = surface_info(fan);
    CHECK(info.exceptional_rays.empty());
    CHECK(info.quotient_order == 1);
}

TEST_CASE("refinement keeps an interior ray") {
    Fan2D fan = coarsest_refinement({{1, 0}, {0, 1}, {1, 1}, {1, 1}});
    CHECK(fan.rays == std::vector<IVec>{{1, 0}, {1, 1}, {0, 1}});
    CHECK(fan.cones.size() == 2);
    SurfaceInfo info = surface_info(fan);
    CHECK(info.exceptional_rays == std::vector<IVec>{{1, 1}});
    CHECK(info.boundary_rays == std::vector<IVec>{{1, 0}, {0, 1}});
    CHECK(info.quotient_order == 1);
    CHECK(info.smooth_flags == std::vector<Int>{1, 1});
}

TEST_CASE("refinement of a decreasing slope chain") {
    // columns of the canonical kernel basis for the chain of blow-ups
    std::vector<IVec> cols{{1, 0}, {0, 1}, {3, 1}, {2, 1}, {1, 1}};
    Fan2D fan = coarsest_refinement(cols);
    CHECK(fan.rays == std::vector<IVec>{{1, 0}, {3, 1}, {2, 1}, {1, 1}, {0, 1}});
    SurfaceInfo info = surface_info(fan);
    CHECK(info.exceptional_rays.size() == 3);
    CHECK(info.quotient_order == 1);
}

TEST_CASE("cyclic quotient order from a non-unimodular extreme pair") {
    Fan2D fan = coarsest_refinement({{1, 0}, {1, 2}});
    SurfaceInfo info = surface_info(fan);
    CHECK(info.quotient_order == 2);
    CHECK(info.exceptional_rays.empty());
}

TEST_CASE("refinement rejects bad inputs") {
    CHECK_THROWS_AS(coarsest_refinement({{1, 0}, {2, 0}}), Error);           // one direction
    CHECK_THROWS_AS(coarsest_refinement({{1, 0}, {-1, 0}}), Error);          // half plane
    CHECK_THROWS_AS(coarsest_refinement({{1, 0}, {0, 1}, {-1, -1}}), Error); // full plane
    CHECK_THROWS_AS(coarsest_refinement({{1, 0}, {0, 1}, {-1, 0}}), Error);  // span of pi
    try {
        coarsest_refinement({{1, 0}, {-2, 0}});
    } catch (const Error& e) {
        CHECK(e.name() == "NotStronglyConvex");
    }
    try {
        coarsest_refinement({{2, 2}, {1, 1}});
    } catch (const Error& e) {
        CHECK(e.name() == "FewerThanTwoRays");
    }
}

TEST_CASE("surface info ignores input order") {
    std::mt19937 rng(141414);
    std::vector<IVec> base{{5, 1}, {1, 0}, {2, 1}, {1, 1}, {3, 2}};
    Fan2D ref = coarsest_refinement(base);
    SurfaceInfo want = surface_info(ref);
    std::vector<IVec> shuffled = base;
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        // also rescale some rays; directions are what matters
        std::vector<IVec> noisy;
        for (const IVec& r : shuffled) {
            Int m = tvargen::rand_int(rng, 1, 3);
            noisy.push_back({r[0] * m, r[1] * m});
        }
        Fan2D f = coarsest_refinement(noisy);
        REQUIRE(f.rays == ref.rays);
        SurfaceInfo got = surface_info(f);
        REQUIRE(got.quotient_order == want.quotient_order);
        REQUIRE(got.exceptional_rays == want.exceptional_rays);
        REQUIRE(got.boundary_rays == want.boundary_rays);
    }
}

TEST_CASE("refinement output covers the hull cone of the input") {
    std::mt19937 rng(808080);
    int done = 0;
    while (done < 300) {
        std::vector<IVec> rays;
        int nr = tvargen::rand_int(rng, 2, 6);
        for (int i = 0; i < nr; ++i) {
            IVec r = tvargen::rand_ivec(rng, 2, 4);
            if (!is_zero(r)) rays.push_back(r);
        }
        if (rays.size() < 2) continue;
        Fan2D fan;
        try {
            fan = coarsest_refinement(rays);
        } catch (const Error&) {
            continue;
        }
        ++done;
        // every input ray appears among the fan rays
        for (const IVec& r : rays) {
            IVec p = primitive(r);
            REQUIRE(std::find(fan.rays.begin(), fan.rays.end(), p) != fan.rays.end());
        }
        // ccw order: consecutive determinants positive, all pairs i<j positive
        for (size_t i = 0; i + 1 < fan.rays.size(); ++i)
            for (size_t j = i + 1; j < fan.rays.size(); ++j)
                REQUIRE(fan.rays[i][0] * fan.rays[j][1] - fan.rays[i][1] * fan.rays[j][0] > 0);
        // every ray inside the extreme cone
        const IVec& lo = fan.rays.front();
        const IVec& hi = fan.rays.back();
        for (const IVec& r : fan.rays) {
            REQUIRE(lo[0] * r[1] - lo[1] * r[0] >= 0);
            REQUIRE(r[0] * hi[1] - r[1] * hi[0] >= 0);
        }
    }
}
