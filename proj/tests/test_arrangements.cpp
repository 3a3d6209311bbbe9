#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "linorb/arrangements.hpp"
#include "linorb/errors.hpp"
#include "linorb/predegree.hpp"

using namespace linorb;
using namespace linorb::testing;

TEST_CASE("five simple planes in P3") {
    const HyperplaneArrangement arr(3, {1, 1, 1, 1, 1});
    CHECK(arr.series_cap() == 15);
    CHECK(hyperplane_top_predegree(arr) == Int("168168000"));

    // Independent combinatorial count: choose 3 of 15 points per plane.
    const Int naive = binomial(15, 3) * binomial(12, 3) * binomial(9, 3) * binomial(6, 3) * binomial(3, 3);
    CHECK(hyperplane_top_predegree(arr) == naive);
}

TEST_CASE("closed formula for simple planes in P3") {
    for (std::int64_t d = 0; d <= 4; ++d) CHECK(p3_simple_degree_formula(d) == 0);
    CHECK(p3_simple_degree_formula(5) == Int("168168000"));
    for (std::int64_t d = 5; d <= 12; ++d) {
        const HyperplaneArrangement arr(3, std::vector<std::int64_t>(d, 1));
        CHECK(p3_simple_degree_formula(d) == hyperplane_top_predegree(arr));
    }
}

TEST_CASE("plane case reduces to the transversal product") {
    Rng rng(61);
    for (int iter = 0; iter < 20; ++iter) {
        std::uniform_int_distribution<std::size_t> nd(1, 7);
        const auto mults = random_mults(rng, nd(rng), 5);
        const HyperplaneArrangement arr(2, mults);
        const auto p2 = hyperplane_predegree(arr);
        // Same multiplicities as a transversal line configuration.
        const auto cfg = LineConfiguration::from_incidence(mults.size(), mults, {});
        const auto plane = closed_form_predegree(cfg);
        REQUIRE(p2.cap() == plane.cap());
        CHECK(p2 == plane);
        if (mults.size() >= 4) {
            const auto table = predegree_table(p2);
            CHECK(table[8] == Rational(transversal_simple_predegree(mults)));
        }
    }
}

TEST_CASE("points on a line") {
    for (std::int64_t d = 1; d <= 9; ++d) {
        const HyperplaneArrangement arr(1, std::vector<std::int64_t>(d, 1));
        CHECK(arr.series_cap() == 3);
        CHECK(hyperplane_top_predegree(arr) == d * (d - 1) * (d - 2));
    }
}

TEST_CASE("multiplicativity by construction") {
    Rng rng(62);
    for (int iter = 0; iter < 15; ++iter) {
        std::uniform_int_distribution<int> nd(1, 4);
        std::uniform_int_distribution<std::int64_t> rd(1, 4);
        const int n = nd(rng);
        auto mults = random_mults(rng, 3, 4);
        const std::int64_t extra = rd(rng);

        const HyperplaneArrangement small(n, mults);
        auto grown = mults;
        grown.push_back(extra);
        const HyperplaneArrangement big(n, grown);

        const unsigned cap = small.series_cap();
        TruncatedSeries factor(cap);
        Int rk = 1;
        for (unsigned k = 0; k <= static_cast<unsigned>(n); ++k) {
            factor = factor + TruncatedSeries::monomial(cap, k, Rational(rk, factorial(k)));
            rk *= extra;
        }
        CHECK(hyperplane_predegree(big) == hyperplane_predegree(small) * factor);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(HyperplaneArrangement(0, {1}), Error);
    CHECK_THROWS_AS(HyperplaneArrangement(-2, {1}), Error);
    CHECK_THROWS_AS(HyperplaneArrangement(3, {}), InvalidMultiplicity);
    CHECK_THROWS_AS(HyperplaneArrangement(3, {1, 0}), InvalidMultiplicity);
}
