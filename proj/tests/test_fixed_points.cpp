#include <functional>
#include <set>
#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "gen.hpp"
#include "tvar/fixed_points.hpp"

using namespace tvar;

namespace {

// split torus: two hyperbolic one-dimensional factors
const IntMatrix kSplitF{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
// blow-up of the plane, with the section making the simplex explicit
const IntMatrix kBlowupF{{1, 1}, {1, 1}, {-1, 0}, {0, -1}};
const IntMatrix kBlowupP{{1, 0, 1, 1}, {0, 1, 1, 1}};
const IntMatrix kBlowupS{{0, 0, -1, 0}, {0, 0, 0, -1}};
// mixed-sign variant and a rank three chain of blow-ups
const IntMatrix kMixedF{{1, 1}, {-1, -1}, {-1, 0}, {0, -1}};
const IntMatrix kChainF{{3, 2, 1}, {1, 1, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
// weight rows of a rank two action on five coordinates
const IntMatrix kFiveF{{6, 0}, {-6, 2}, {0, -1}, {3, 0}, {2, 0}};

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

AHPresentation point_pres() {
    AHPresentation p;
    p.lattice_rank = 2;
    p.tail = Cone{2, {}};
    p.terms.push_back({axis_label(1), {1, 0}, 1, single_point(qv({3, -2}))});
    p.terms.push_back({exceptional_label(1), {1, 1}, 2, single_point(qv({0, 0}))});
    p.terms.push_back({axis_label(2), {0, 1}, 1, single_point(qv({-1, 5}))});
    return p;
}

std::string name_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.name();
    }
    return "none";
}

}  // namespace

TEST_CASE("direction normalization") {
    CHECK(subtorus_direction({-2, 0}).l == IVec{1, 0});
    CHECK(subtorus_direction({0, -3}).l == IVec{0, 1});
    CHECK(subtorus_direction({-4, 6}).l == IVec{2, -3});
    CHECK(subtorus_direction({5, -10, 15}).l == IVec{1, -2, 3});
    CHECK(name_of([] { subtorus_direction({0, 0}); }) == "ZeroVector");
}

TEST_CASE("slice criterion on the split model") {
    AHPresentation pres = ah_presentation(kSplitF);

    FixedLocusReport r1 = fixed_components(pres, subtorus_direction({1, 0}));
    REQUIRE(r1.fixed_labels.size() == 1);
    CHECK(r1.fixed_labels[0] == axis_label(1));
    CHECK(r1.isotropy.at(axis_label(1)) == Isotropy::infinite);
    CHECK(r1.isotropy.at(axis_label(2)) == Isotropy::finite);

    FixedLocusReport r2 = fixed_components(pres, subtorus_direction({0, 1}));
    REQUIRE(r2.fixed_labels.size() == 1);
    CHECK(r2.fixed_labels[0] == axis_label(2));

    CHECK(fixed_components(pres, subtorus_direction({1, 1})).fixed_labels.empty());
    CHECK(fixed_components(pres, subtorus_direction({1, -1})).fixed_labels.empty());

    CHECK(name_of([&] { fixed_components(pres, subtorus_direction({1, 0, 0})); }) ==
          "DimensionMismatch");
}

TEST_CASE("point coefficients are never fixed") {
    AHPresentation pres = point_pres();
    for (const FixedLocusReport& r : fixed_locus_survey(pres, 2)) {
        CHECK(r.fixed_labels.empty());
        for (const auto& [label, iso] : r.isotropy) {
            (void)label;
            CHECK(iso == Isotropy::finite);
        }
    }
}

TEST_CASE("weight pairing oracle") {
    CHECK(oracle_fixed_points_linear(kSplitF, subtorus_direction({1, 0})) ==
          std::vector<size_t>{2, 3});
    CHECK(oracle_fixed_points_linear(kSplitF, subtorus_direction({0, 1})) ==
          std::vector<size_t>{0, 1});
    CHECK(oracle_fixed_points_linear(kSplitF, subtorus_direction({1, 1})).empty());
    CHECK(oracle_fixed_points_linear(kFiveF, subtorus_direction({0, 1})) ==
          std::vector<size_t>{0, 3, 4});
    CHECK(oracle_fixed_points_linear(kFiveF, subtorus_direction({1, 3})) ==
          std::vector<size_t>{1});
    CHECK(name_of([] { oracle_fixed_points_linear(kSplitF, subtorus_direction({1, 0, 0})); }) ==
          "DimensionMismatch");
}

TEST_CASE("height bounded survey") {
    AHPresentation pres = ah_presentation(kSplitF);

    std::vector<FixedLocusReport> survey = fixed_locus_survey(pres, 1);
    REQUIRE(survey.size() == 4);
    CHECK(survey[0].direction.l == IVec{0, 1});
    CHECK(survey[1].direction.l == IVec{1, -1});
    CHECK(survey[2].direction.l == IVec{1, 0});
    CHECK(survey[3].direction.l == IVec{1, 1});
    CHECK(survey[0].fixed_labels == std::vector<DivisorLabel>{axis_label(2)});
    CHECK(survey[1].fixed_labels.empty());
    CHECK(survey[2].fixed_labels == std::vector<DivisorLabel>{axis_label(1)});
    CHECK(survey[3].fixed_labels.empty());

    CHECK(fixed_locus_survey(pres, 2).size() == 8);
    CHECK(fixed_locus_survey(ah_presentation(kChainF), 1).size() == 13);

    CHECK(name_of([&] { fixed_locus_survey(pres, 0); }) == "HeightBoundTooSmall");
    CHECK(name_of([&] { fixed_locus_survey(pres, -3); }) == "HeightBoundTooSmall");
}

TEST_CASE("full dimensional coefficients are fixed in every direction") {
    AHPresentation pres = ah_presentation(ExactSequenceData{kBlowupF, kBlowupP, kBlowupS});
    for (const FixedLocusReport& r : fixed_locus_survey(pres, 2)) {
        CHECK(r.fixed_labels == std::vector<DivisorLabel>{exceptional_label(1)});
        CHECK(r.isotropy.at(axis_label(1)) == Isotropy::finite);
        CHECK(r.isotropy.at(axis_label(2)) == Isotropy::finite);
    }
}

TEST_CASE("reports ignore sign and scale of the direction") {
    std::mt19937 rng(940940);
    std::vector<AHPresentation> pres;
    pres.push_back(ah_presentation(kSplitF));
    pres.push_back(ah_presentation(ExactSequenceData{kBlowupF, kBlowupP, kBlowupS}));
    pres.push_back(ah_presentation(kMixedF));
    pres.push_back(ah_presentation(kChainF));
    for (const AHPresentation& p : pres) {
        for (int trial = 0; trial < 150; ++trial) {
            IVec raw = tvargen::rand_ivec(rng, p.lattice_rank, 4);
            if (is_zero(raw)) continue;
            IVec neg = raw;
            for (Int& x : neg) x = -x;
            IVec scaled = raw;
            for (Int& x : scaled) x *= 3;
            FixedLocusReport a = fixed_components(p, subtorus_direction(raw));
            CHECK(a == fixed_components(p, subtorus_direction(neg)));
            CHECK(a == fixed_components(p, subtorus_direction(scaled)));
            // normalizing the direction must not change any verdict
            for (const PresentationTerm& t : p.terms) {
                bool fixed = line_slice_positive_length(t.coefficient, to_qvec(raw));
                CHECK(fixed == (a.isotropy.at(t.label) == Isotropy::infinite));
            }
        }
    }
}

TEST_CASE("slice verdicts against the weight oracle") {
    // split model: both routes agree for every height two direction
    AHPresentation split = ah_presentation(kSplitF);
    for (const FixedLocusReport& r : fixed_locus_survey(split, 2)) {
        bool wide = !r.fixed_labels.empty();
        bool survives = !oracle_fixed_points_linear(kSplitF, r.direction).empty();
        CHECK(wide == survives);
    }

    // blow-up model: the full-dimensional coefficient is wide in every
    // direction, while the ambient weight pairings only vanish along the
    // three edge directions of the simplex, so the routes agree exactly there
    AHPresentation blowup = ah_presentation(ExactSequenceData{kBlowupF, kBlowupP, kBlowupS});
    const std::set<IVec> edges = {{0, 1}, {1, -1}, {1, 0}};
    size_t agreements = 0;
    for (const FixedLocusReport& r : fixed_locus_survey(blowup, 2)) {
        bool wide = !r.fixed_labels.empty();
        bool survives = !oracle_fixed_points_linear(kBlowupF, r.direction).empty();
        if (wide == survives) {
            CHECK(edges.count(r.direction.l) == 1);
            ++agreements;
        } else {
            CHECK(edges.count(r.direction.l) == 0);
        }
    }
    CHECK(agreements == 3);
}

TEST_CASE("isotropy partitions the labels") {
    std::vector<AHPresentation> pres;
    pres.push_back(ah_presentation(kSplitF));
    pres.push_back(ah_presentation(kMixedF));
    pres.push_back(ah_presentation(kChainF));
    for (const AHPresentation& p : pres) {
        for (const FixedLocusReport& r : fixed_locus_survey(p, 2)) {
            CHECK(r.isotropy.size() == p.terms.size());
            std::vector<DivisorLabel> wide;
            for (const PresentationTerm& t : p.terms)
                if (r.isotropy.at(t.label) == Isotropy::infinite) wide.push_back(t.label);
            CHECK(r.fixed_labels == wide);
        }
    }

    AHPresentation dup = point_pres();
    dup.terms[1].label = axis_label(1);
    CHECK(name_of([&] { fixed_components(dup, subtorus_direction({1, 0})); }) ==
          "DuplicateLabel");
}
