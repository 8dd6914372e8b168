#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "gen.hpp"
#include "tvar/classify.hpp"
#include "tvar/divisor.hpp"

using namespace tvar;

namespace {

const IntMatrix kSplitF{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
const IntMatrix kBlowupF{{1, 1}, {1, 1}, {-1, 0}, {0, -1}};
const IntMatrix kBlowupP{{1, 0, 1, 1}, {0, 1, 1, 1}};
const IntMatrix kBlowupS{{0, 0, -1, 0}, {0, 0, 0, -1}};
const IntMatrix kMixedF{{1, 1}, {-1, -1}, {-1, 0}, {0, -1}};

Poly uu() { return poly_var(2, 0); }
Poly vv() { return poly_var(2, 1); }
Poly cc(long c) { return poly_const(2, Rat(c)); }
Poly tt() { return poly_var(1, 0); }
Poly tc(long c) { return poly_const(1, Rat(c)); }

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

// random polynomial with small support, total degree at most 2
Poly rand_curve(std::mt19937& rng) {
    Poly p = poly_zero(2);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
            if (tvargen::rand_int(rng, 0, 2) == 0)
                p = add(p, poly_monomial(2, {a, b}, Rat(tvargen::rand_int(rng, -3, 3))));
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

AHPresentation axis_pres(const Polyhedron& d1, const Polyhedron& d2) {
    AHPresentation p;
    p.lattice_rank = 2;
    p.tail = Cone{2, {}};
    p.terms.push_back({axis_label(1), {1, 0}, 1, d1});
    p.terms.push_back({axis_label(2), {0, 1}, 1, d2});
    return p;
}

}  // namespace

TEST_CASE("normal crossing points") {
    // coordinate axes meet once, transversally
    SncReport axes = snc_check(curve_spec(uu()), curve_spec(vv()));
    REQUIRE(axes.points.size() == 1);
    CHECK(axes.points[0] == qv({0, 0}));
    CHECK(axes.all_transverse == TriBool::yes);

    // the axis and the parabola u + v + v^2 meet at two rational points
    Poly f2 = add(add(uu(), vv()), mul(vv(), vv()));
    SncReport mixed = snc_check(curve_spec(uu()), curve_spec(f2));
    REQUIRE(mixed.points.size() == 2);
    CHECK(mixed.points[0] == qv({0, -1}));
    CHECK(mixed.points[1] == qv({0, 0}));
    CHECK(mixed.all_transverse == TriBool::yes);

    // tangential contact: u = v^2 touches the axis u = 0
    SncReport tangent = snc_check(curve_spec(uu()), curve_spec(sub(uu(), mul(vv(), vv()))));
    REQUIRE(tangent.points.size() == 1);
    CHECK(tangent.points[0] == qv({0, 0}));
    CHECK(tangent.all_transverse == TriBool::no);

    // two parabolas tangent at the origin
    SncReport pair = snc_check(curve_spec(sub(uu(), mul(vv(), vv()))),
                               curve_spec(sub(uu(), scale(mul(vv(), vv()), Rat(2)))));
    REQUIRE(pair.points.size() == 1);
    CHECK(pair.points[0] == qv({0, 0}));
    CHECK(pair.all_transverse == TriBool::no);

    // v = 0 against v + u^3 - 2u: one rational point plus an irrational pair
    Poly cubic = add(vv(), sub(mul(mul(uu(), uu()), uu()), scale(uu(), Rat(2))));
    SncReport part = snc_check(curve_spec(vv()), curve_spec(cubic));
    REQUIRE(part.points.size() == 1);
    CHECK(part.points[0] == qv({0, 0}));
    CHECK(part.all_transverse == TriBool::undecided);

    // v^2 = 2 never meets the rational plane points of u = 0
    SncReport none = snc_check(curve_spec(sub(mul(vv(), vv()), cc(2))), curve_spec(uu()));
    CHECK(none.points.empty());
    CHECK(none.all_transverse == TriBool::undecided);

    CHECK(name_of([] { snc_check(curve_spec(uu()), curve_spec(scale(uu(), Rat(2)))); }) ==
          "NotCoprime");
    CHECK(name_of([] { snc_check(curve_spec(mul(uu(), vv())), curve_spec(uu())); }) ==
          "NotCoprime");
    CHECK(name_of([] { snc_check(curve_spec(uu()), curve_spec(cc(0))); }) == "ZeroPolynomial");
}

TEST_CASE("normal crossing search is symmetric and grid complete") {
    std::mt19937 rng(950950);
    int done = 0;
    while (done < 300) {
        Poly f = rand_curve(rng);
        Poly g = rand_curve(rng);
        if (is_zero(f) || is_zero(g) || !coprime_bivariate(f, g)) continue;
        ++done;
        CurveSpec cf = curve_spec(f), cg = curve_spec(g);
        SncReport ab = snc_check(cf, cg);
        SncReport ba = snc_check(cg, cf);
        CHECK(ab.points == ba.points);
        CHECK(ab.all_transverse == ba.all_transverse);
        // every reported point lies on both curves
        for (const QVec& pt : ab.points) {
            CHECK(evaluate(f, pt) == 0);
            CHECK(evaluate(g, pt) == 0);
        }
        // every small rational grid zero is reported
        for (long x = -3; x <= 3; ++x)
            for (long y = -3; y <= 3; ++y) {
                QVec pt = qv({x, y});
                if (evaluate(f, pt) == 0 && evaluate(g, pt) == 0)
                    CHECK(std::count(ab.points.begin(), ab.points.end(), pt) == 1);
            }
    }
}

TEST_CASE("cyclic invariance of curves") {
    CHECK(mu_action(4, 2, 2).order == 2);
    CHECK(mu_action(4, 2, 2).a == 1);
    CHECK(mu_action(6, 4, 2).order == 3);
    CHECK(mu_action(6, 4, 2).a == 2);
    CHECK(mu_action(6, 4, 2).b == 1);
    CHECK(mu_action(5, 7, -3).a == 2);
    CHECK(mu_action(5, 7, -3).b == 2);
    CHECK(mu_action(1, 7, -3).order == 1);
    CHECK(name_of([] { mu_action(0, 1, 1); }) == "OrderNotPositive");

    MuInvariance single = mu_invariance_check(curve_spec(uu()), mu_action(2, 1, 1));
    CHECK(single.invariant);
    CHECK(single.contains_origin);

    Poly f = add(uu(), mul(vv(), vv()));
    CHECK(mu_invariance_check(curve_spec(f), mu_action(2, 0, 1)).invariant);
    CHECK_FALSE(mu_invariance_check(curve_spec(add(uu(), vv())), mu_action(2, 0, 1)).invariant);

    // semi-invariance with a nonzero common residue also counts
    CHECK(mu_invariance_check(curve_spec(add(uu(), vv())), mu_action(2, 1, 1)).invariant);

    CHECK_FALSE(mu_invariance_check(curve_spec(add(uu(), cc(1))), mu_action(3, 1, 0)).contains_origin);

    // the trivial group leaves every curve invariant
    std::mt19937 rng(951951);
    for (int trial = 0; trial < 200; ++trial) {
        Poly g = rand_curve(rng);
        if (is_zero(g)) continue;
        MuAction triv = mu_action(1, tvargen::rand_int(rng, -5, 5), tvargen::rand_int(rng, -5, 5));
        CHECK(mu_invariance_check(curve_spec(g), triv).invariant);
    }
}

TEST_CASE("parametrized line certificates") {
    // the axis u = 0 with its obvious parametrization
    CHECK(a1_check(curve_spec(uu(), tc(0), tt())) == TriBool::yes);

    // u + v + v^2 parametrized by v = t
    Poly f2 = add(add(uu(), vv()), mul(vv(), vv()));
    Poly pt = sub(neg(tt()), mul(tt(), tt()));
    CHECK(a1_check(curve_spec(f2, pt, tt())) == TriBool::yes);

    // cuspidal cubic: the parametrization itself passes, smoothness is a
    // separate gate handled by the crossing check
    Poly cusp = sub(mul(uu(), uu()), mul(mul(vv(), vv()), vv()));
    Poly t3 = mul(mul(tt(), tt()), tt());
    Poly t2 = mul(tt(), tt());
    CHECK(a1_check(curve_spec(cusp, t3, t2)) == TriBool::yes);

    // nodal cubic: the divided difference test is generic, so the isolated
    // double point escapes it
    Poly nodal = sub(add(mul(mul(uu(), uu()), uu()), mul(uu(), uu())), mul(vv(), vv()));
    CHECK(a1_check(curve_spec(nodal, sub(t2, tc(1)), sub(t3, tt()))) == TriBool::yes);

    // no parametrization given
    CHECK(a1_check(curve_spec(f2)) == TriBool::undecided);

    // image not contained in the curve
    CHECK(name_of([] { curve_spec(uu(), tt(), tt()); }) == "ParametrizationMismatch");
    CurveSpec raw{uu(), std::make_pair(tt(), tt())};
    CHECK(name_of([&] { a1_check(raw); }) == "ParametrizationMismatch");

    // degree mismatch against a proper parametrization stays undecided
    CHECK(a1_check(curve_spec(sub(uu(), vv()), t2, t2)) == TriBool::undecided);

    // double line swept twice: constant first coordinate, even second
    CHECK(a1_check(curve_spec(mul(uu(), uu()), tc(0), t2)) == TriBool::no);
}

TEST_CASE("product splitting of weight data") {
    auto split = product_split(kSplitF);
    REQUIRE(split.has_value());
    CHECK(split->first == std::vector<size_t>{1, 2});
    CHECK(split->second == std::vector<size_t>{3, 4});

    CHECK_FALSE(product_split(kBlowupF).has_value());
    CHECK_FALSE(product_split(kMixedF).has_value());

    // one hyperbolic pair plus an inert coordinate
    auto degenerate = product_split(IntMatrix{{1}, {-1}, {0}});
    REQUIRE(degenerate.has_value());
    CHECK(degenerate->first == std::vector<size_t>{1, 2});
    CHECK(degenerate->second == std::vector<size_t>{3});

    // unbalanced blocks of sizes two and three
    auto wide = product_split(IntMatrix{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, -1}});
    REQUIRE(wide.has_value());
    CHECK(wide->first == std::vector<size_t>{1, 2});
    CHECK(wide->second == std::vector<size_t>{3, 4, 5});

    CHECK(name_of([] { product_split(IntMatrix{{1, 0}, {0, 1}, {1, 1}, {1, 2}}); }) ==
          "NotFullyHyperbolic");
    CHECK(name_of([] { product_split(IntMatrix{{1}, {-1}, {0}, {0}}); }) == "CodimensionNotTwo");
}

TEST_CASE("split blocks carry the invariant generators") {
    std::mt19937 rng(952952);
    const std::vector<IntMatrix> pieces = {
        IntMatrix{{1}, {-1}}, IntMatrix{{2}, {-1}}, IntMatrix{{1}, {-3}}, IntMatrix{{3}, {-2}}};
    for (int trial = 0; trial < 60; ++trial) {
        const IntMatrix& a = pieces[tvargen::rand_int(rng, 0, 3)];
        const IntMatrix& b = pieces[tvargen::rand_int(rng, 0, 3)];
        IntMatrix f(4, 2);
        for (size_t i = 0; i < 2; ++i) {
            f(i, 0) = a(i, 0);
            f(i + 2, 1) = b(i, 0);
        }
        auto split = product_split(f);
        REQUIRE(split.has_value());
        CHECK(split->first == std::vector<size_t>{1, 2});
        CHECK(split->second == std::vector<size_t>{3, 4});

        // every minimal invariant monomial lives in a single block
        InvariantGenerators gens = invariant_ring_generators(f, 8);
        CHECK(gens.generators.size() >= 2);
        for (const IVec& g : gens.generators) {
            bool left = g[2] == 0 && g[3] == 0;
            bool right = g[0] == 0 && g[1] == 0;
            CHECK((left || right));
        }

        // interleaving the rows interleaves the reported partition
        IntMatrix g(4, 2);
        g(0, 0) = a(0, 0);
        g(2, 0) = a(1, 0);
        g(1, 1) = b(0, 0);
        g(3, 1) = b(1, 0);
        auto interleaved = product_split(g);
        REQUIRE(interleaved.has_value());
        CHECK(interleaved->first == std::vector<size_t>{1, 3});
        CHECK(interleaved->second == std::vector<size_t>{2, 4});
    }
}

TEST_CASE("linearization rule chain") {
    Verdict lin = linearization_verdict(ah_presentation(kSplitF));
    CHECK(lin.outcome == Outcome::linear);
    REQUIRE(lin.evidence.size() == 2);
    CHECK(lin.evidence[0] == "both coefficients extend in positive dimension");
    CHECK(lin.evidence[1] == "direction spans meet only at the origin");

    // blow-up data: both curve coefficients collapse to points
    Verdict bi = linearization_verdict(ah_presentation(ExactSequenceData{kBlowupF, kBlowupP, kBlowupS}));
    CHECK(bi.outcome == Outcome::bi_cyclic_cover);
    CHECK(bi.evidence == std::vector<std::string>{"both coefficients are single points"});

    // mixed data: one segment and one point
    Verdict cyc = linearization_verdict(ah_presentation(kMixedF));
    CHECK(cyc.outcome == Outcome::cyclic_cover);
    CHECK(cyc.evidence == std::vector<std::string>{"second coefficient is a single point"});

    // two prescribed points on the curve terms
    Verdict points = linearization_verdict(
        axis_pres(single_point({Rat(2, 3), Rat(0)}), single_point({Rat(-1, 2), Rat(0)})));
    CHECK(points.outcome == Outcome::bi_cyclic_cover);

    Verdict flipped = linearization_verdict(
        axis_pres(single_point({Rat(0), Rat(0)}), hull(2, {qv({0, 0}), qv({1, 2})}, {})));
    CHECK(flipped.outcome == Outcome::cyclic_cover);
    CHECK(flipped.evidence == std::vector<std::string>{"first coefficient is a single point"});

    // collinear segments share their direction line
    Verdict shared = linearization_verdict(
        axis_pres(hull(2, {qv({0, 0}), qv({1, 1})}, {}), hull(2, {qv({2, 0}), qv({4, 2})}, {})));
    CHECK(shared.outcome == Outcome::linear);
    CHECK(shared.evidence[1] == "direction spans share a common line");

    AHPresentation missing = axis_pres(single_point(qv({0, 0})), single_point(qv({0, 0})));
    missing.terms[1].label = exceptional_label(1);
    CHECK(name_of([&] { linearization_verdict(missing); }) == "UnsupportedShape");

    AHPresentation dup = axis_pres(single_point(qv({0, 0})), single_point(qv({0, 0})));
    dup.terms[1].label = axis_label(1);
    CHECK(name_of([&] { linearization_verdict(dup); }) == "UnsupportedShape");

    AHPresentation bad = axis_pres(single_point(qv({0, 0})), single_point(qv({0, 0})));
    bad.terms[1].label = axis_label(3);
    CHECK(name_of([&] { linearization_verdict(bad); }) == "UnsupportedShape");

    AHPresentation hollow = axis_pres(Polyhedron::empty(2), single_point(qv({0, 0})));
    CHECK(name_of([&] { linearization_verdict(hollow); }) == "UnsupportedShape");
}

TEST_CASE("rule chain outcomes follow the coefficient dimensions") {
    std::mt19937 rng(953953);
    for (int trial = 0; trial < 400; ++trial) {
        auto shape = [&]() {
            int kind = tvargen::rand_int(rng, 0, 2);
            QVec base = {Rat(tvargen::rand_int(rng, -3, 3)), Rat(tvargen::rand_int(rng, -3, 3))};
            if (kind == 0) return single_point(base);
            QVec other = {base[0] + Rat(tvargen::rand_int(rng, 0, 2)),
                          base[1] + Rat(tvargen::rand_int(rng, -2, 2))};
            if (kind == 1 || other == base) return hull(2, {base, other}, {});
            QVec third = {base[0] + Rat(tvargen::rand_int(rng, -2, 2)),
                          base[1] + Rat(1 + tvargen::rand_int(rng, 0, 2))};
            return hull(2, {base, other, third}, {});
        };
        Polyhedron d1 = shape();
        Polyhedron d2 = shape();
        Verdict v = linearization_verdict(axis_pres(d1, d2));
        size_t dim1 = minimal_subspace(d1).size();
        size_t dim2 = minimal_subspace(d2).size();
        if (dim1 >= 1 && dim2 >= 1) CHECK(v.outcome == Outcome::linear);
        else if (dim1 == 0 && dim2 == 0) CHECK(v.outcome == Outcome::bi_cyclic_cover);
        else CHECK(v.outcome == Outcome::cyclic_cover);
        CHECK_FALSE(v.evidence.empty());
        if (dim1 == 0 || dim2 == 0) CHECK(v.outcome != Outcome::linear);
    }
}
