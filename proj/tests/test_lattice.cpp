#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "tvar/lattice.hpp"
#include "tvar/qlinalg.hpp"

using namespace tvar;

namespace {

// weight matrices used across the suite
const IntMatrix kSplitF{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
const IntMatrix kBigF{{6, 0}, {-6, 2}, {0, -1}, {3, 0}, {2, 0}};

}  // namespace

TEST_CASE("smith normal form of the identity") {
    SmithForm f = smith_normal_form(IntMatrix::identity(3));
    CHECK(f.s == IntMatrix::identity(3));
}

TEST_CASE("cokernel map on the split four-dimensional action") {
    IntMatrix p = cokernel_map(kSplitF);
    CHECK(p == IntMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK((p * kSplitF).is_zero());
}

TEST_CASE("cokernel map on the five-dimensional action") {
    IntMatrix p = cokernel_map(kBigF);
    CHECK(same_row_lattice(p, IntMatrix{{1, 1, 2, 0, 0}, {0, 1, 2, 2, 0}, {0, 1, 2, 0, 3}}));
    CHECK((p * kBigF).is_zero());
}

TEST_CASE("cokernel of a square unimodular matrix is empty") {
    IntMatrix p = cokernel_map(IntMatrix::identity(3));
    CHECK(p.rows() == 0);
    CHECK(p.cols() == 3);
}

TEST_CASE("cokernel map preconditions") {
    CHECK_THROWS_AS(cokernel_map(IntMatrix{{1, 0}, {2, 0}, {0, 0}}), Error);
    CHECK_THROWS_AS(cokernel_map(IntMatrix{{2}, {0}}), Error);
    try {
        cokernel_map(IntMatrix{{2}, {0}});
    } catch (const Error& e) {
        CHECK(e.name() == "TorsionCokernel");
        CHECK(e.family() == ErrorFamily::precondition);
    }
    try {
        cokernel_map(IntMatrix{{1, 0}, {2, 0}, {0, 0}});
    } catch (const Error& e) {
        CHECK(e.name() == "RankDeficient");
    }
}

TEST_CASE("section of the split action") {
    IntMatrix s = section(kSplitF);
    CHECK(s * kSplitF == IntMatrix::identity(2));
    // the published choice validates too
    IntMatrix published{{1, 0, 0, 0}, {0, 0, 1, 0}};
    CHECK(published * kSplitF == IntMatrix::identity(2));
}

TEST_CASE("section of the identity is the identity") {
    CHECK(section(IntMatrix::identity(3)) == IntMatrix::identity(3));
}

TEST_CASE("section of the blow-up action in dimension four") {
    IntMatrix f{{1, 1}, {1, 1}, {-1, 0}, {0, -1}};
    CHECK(section(f) * f == IntMatrix::identity(2));
}

TEST_CASE("exact sequence triple validates") {
    ExactSequenceData d = exact_sequence(kSplitF);
    CHECK_NOTHROW(validate_exact_sequence(d));
    ExactSequenceData bad = d;
    bad.s = IntMatrix{{1, 1, 0, 0}, {0, 0, 1, 0}};
    CHECK_THROWS_AS(validate_exact_sequence(bad), Error);
}

TEST_CASE("exact sequence on random saturated weight matrices") {
    std::mt19937 rng(555001);
    int built = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        size_t n = tvargen::rand_int(rng, 2, 5);
        size_t k = tvargen::rand_int(rng, 1, static_cast<int>(n));
        // U * [I|0]^T * W has unit invariant factors by construction
        IntMatrix u = tvargen::rand_unimodular(rng, n, 8);
        IntMatrix w = tvargen::rand_unimodular(rng, k, 8);
        IntMatrix pick(n, k);
        for (size_t i = 0; i < k; ++i) pick(i, i) = 1;
        IntMatrix f = u * pick * w;
        IntMatrix p = cokernel_map(f);
        IntMatrix s = section(f);
        REQUIRE((p * f).is_zero());
        REQUIRE(s * f == IntMatrix::identity(k));
        REQUIRE(p.rows() == n - k);
        // canonical: any row-equivalent basis gives the same P
        if (p.rows() > 0) {
            IntMatrix mix = tvargen::rand_unimodular(rng, p.rows(), 6);
            REQUIRE(cokernel_map(f) == hermite_normal_form(mix * p));
        }
        ++built;
    }
    REQUIRE(built == 1000);
}

TEST_CASE("rational elimination basics") {
    std::vector<QVec> rows{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(0), Rat(1), Rat(1)}};
    CHECK(q_rank(rows) == 2);
    auto sol = solve_linear({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}, {Rat(3), Rat(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 1);
    CHECK_FALSE(solve_linear({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {Rat(1), Rat(3)}).has_value());
    auto ns = nullspace({{Rat(1), Rat(1), Rat(0)}}, 3);
    REQUIRE(ns.size() == 2);
    for (const QVec& v : ns) CHECK(dot(QVec{Rat(1), Rat(1), Rat(0)}, v) == 0);
    CHECK(in_span({QVec{Rat(1), Rat(0)}, QVec{Rat(0), Rat(1)}}, QVec{Rat(5), Rat(7)}));
    CHECK_FALSE(in_span({QVec{Rat(1), Rat(1)}}, QVec{Rat(1), Rat(2)}));
}

TEST_CASE("solve and nullspace agree on random systems") {
    std::mt19937 rng(918273);
    for (int trial = 0; trial < 1000; ++trial) {
        size_t m = tvargen::rand_int(rng, 1, 4);
        size_t n = tvargen::rand_int(rng, 1, 4);
        std::vector<QVec> a(m, QVec(n));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j) a[i][j] = tvargen::rand_int(rng, -5, 5);
        QVec x(n);
        for (size_t j = 0; j < n; ++j) x[j] = Rat(tvargen::rand_int(rng, -5, 5), tvargen::rand_int(rng, 1, 3));
        QVec b(m, Rat(0));
        for (size_t i = 0; i < m; ++i) b[i] = dot(a[i], x);
        auto sol = solve_linear(a, b);
        REQUIRE(sol.has_value());
        for (size_t i = 0; i < m; ++i) REQUIRE(dot(a[i], *sol) == b[i]);
        // kernel basis really annihilates
        for (const QVec& v : nullspace(a, n))
            for (size_t i = 0; i < m; ++i) REQUIRE(dot(a[i], v) == 0);
        REQUIRE(q_rank(a) + nullspace(a, n).size() == n);
    }
}
