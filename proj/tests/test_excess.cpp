#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "linorb/errors.hpp"
#include "linorb/excess.hpp"
#include "linorb/predegree.hpp"

using namespace linorb;
using namespace linorb::testing;

namespace {

RationalLine L(long a, long b, long c) { return RationalLine::from_ints(Int(a), Int(b), Int(c)); }

Rational frac(long num, long den) { return Rational(Int(num), Int(den)); }

LineCenter random_center(Rng& rng) {
    std::uniform_int_distribution<std::int64_t> rd(1, 5);
    std::uniform_int_distribution<int> sd(0, 4);
    const std::int64_t r = rd(rng);
    const int s = sd(rng);
    std::vector<std::int64_t> pms;
    std::int64_t d = r;
    for (int u = 0; u < s; ++u) {
        std::uniform_int_distribution<std::int64_t> extra(1, 6);
        const std::int64_t o = extra(rng);
        pms.push_back(r + o);
        d += o;
    }
    return LineCenter(r, d, std::move(pms));
}

}  // namespace

TEST_CASE("point contribution, explicit blocks") {
    const auto c = point_contribution_explicit(2, 3);
    for (unsigned j = 0; j <= 5; ++j) CHECK(c.coeff(j).is_zero());
    CHECK(c.coeff(6) == frac(64, 720));
    CHECK(c.coeff(7) == frac(576, 5040));
    CHECK(c.coeff(8) == frac(3072, 40320));

    // Star center m = d: the t^7 numerator collapses to d^7.
    for (std::int64_t d = 2; d <= 9; ++d) {
        const auto star = point_contribution_explicit(d, d);
        CHECK(star.coeff(7) == Rational(ipow(Int(d), 7), factorial(7)));
    }

    CHECK_THROWS_AS(point_contribution_explicit(1, 3), Error);
    CHECK_THROWS_AS(point_contribution_explicit(4, 3), Error);
}

TEST_CASE("point contribution, chow route") {
    CHECK(point_contribution_chow(2, 3) == point_contribution_explicit(2, 3));
    // alpha = 6 integrand constant term is m^6.
    const auto c = point_contribution_chow(5, 9);
    CHECK(c.coeff(6) == Rational(ipow(Int(5), 6), factorial(6)));
    for (std::int64_t d = 2; d <= 40; ++d)
        for (std::int64_t m = 2; m <= d; ++m)
            CHECK(point_contribution_chow(m, d) == point_contribution_explicit(m, d));
}

TEST_CASE("line contribution, explicit blocks") {
    // Isolated line with d = r: coefficients collapse to r^j t^j / j!.
    for (std::int64_t r = 1; r <= 6; ++r) {
        const auto iso = line_contribution_explicit(LineCenter(r, r, {}));
        for (unsigned j = 0; j <= 2; ++j) CHECK(iso.coeff(j).is_zero());
        for (unsigned j = 3; j <= 8; ++j) CHECK(iso.coeff(j) == Rational(ipow(Int(r), j), factorial(j)));
    }

    // A triangle side: r = 1, d = 3, two double points.
    const auto side = line_contribution_explicit(LineCenter(1, 3, {2, 2}));
    CHECK(side.coeff(3) == frac(1, 6));
    CHECK(side.coeff(4) == frac(9, 24));

    CHECK_THROWS_AS(LineCenter(0, 3, {}), InvalidMultiplicity);
    CHECK_THROWS_AS(LineCenter(2, 1, {}), Error);
    CHECK_THROWS_AS(LineCenter(2, 5, {2}), Error);  // point mult below r+1
}

TEST_CASE("blown P5 arithmetic") {
    const std::size_t s = 3;
    const auto l = BlownP5Element::hyperplane(s);
    const auto e0 = BlownP5Element::exceptional(s, 0);
    const auto e1 = BlownP5Element::exceptional(s, 1);

    // Distinct exceptional classes annihilate each other.
    CHECK(e0 * e1 == BlownP5Element(s));
    CHECK(e0 * e0 * e1 * e1 == BlownP5Element(s));
    CHECK((l * e0) * e1 == BlownP5Element(s));

    // Truncation above total degree 5.
    CHECK(l.pow(6) == BlownP5Element(s));
    CHECK(e0.pow(6) == BlownP5Element(s));
    CHECK(l.pow(3) * e0.pow(3) == BlownP5Element(s));

    // Commutativity on random small elements.
    Rng rng(41);
    const auto random_element = [&] {
        BlownP5Element x(s);
        for (unsigned a = 0; a <= 5; ++a) x.pure(a) = random_rational(rng, 6, 4);
        for (std::size_t u = 0; u < s; ++u)
            for (unsigned b = 1; b <= 5; ++b)
                for (unsigned a = 0; a + b <= 5; ++a) x.mixed(u, a, b) = random_rational(rng, 6, 4);
        return x;
    };
    for (int iter = 0; iter < 20; ++iter) {
        const auto x = random_element();
        const auto y = random_element();
        CHECK(x * y == y * x);
    }

    // Reciprocal really inverts units.
    for (int iter = 0; iter < 10; ++iter) {
        auto x = random_element();
        if (x.pure(0).is_zero()) x.pure(0) = 1;
        CHECK(x * x.reciprocal() == BlownP5Element::constant(s, 1));
    }
}

TEST_CASE("chow integral pushforward") {
    const std::size_t s = 2;
    const auto l = BlownP5Element::hyperplane(s);
    const auto e = BlownP5Element::exceptional(s, 0);
    CHECK(chow_integral_blown_p5(l.pow(5)) == Rational(1));
    CHECK(chow_integral_blown_p5(l.pow(2) * e.pow(3)) == Rational(1));
    CHECK(chow_integral_blown_p5(l * e.pow(4)) == Rational(3));
    CHECK(chow_integral_blown_p5(e.pow(5)) == Rational(6));
    CHECK(chow_integral_blown_p5(l * e.pow(2)) == Rational(0));  // not top degree
    const auto cross = l * BlownP5Element::exceptional(s, 0).pow(2) * BlownP5Element::exceptional(s, 1).pow(2);
    CHECK(chow_integral_blown_p5(cross) == Rational(0));
}

TEST_CASE("line contribution, chow route") {
    // s = 0 specializes to the first explicit block; check the j = 5 value.
    for (std::int64_t r = 1; r <= 4; ++r) {
        for (std::int64_t d = r; d <= r + 5; ++d) {
            const LineCenter c(r, d, {});
            const auto chow = line_contribution_chow(c);
            CHECK(chow == line_contribution_explicit(c));
            const Int rI(r), dI(d);
            CHECK(chow.coeff(5) ==
                  Rational(10 * dI * dI * ipow(rI, 3) - 15 * dI * ipow(rI, 4) + 6 * ipow(rI, 5), factorial(5)));
            for (unsigned j = 0; j < 3; ++j) CHECK(chow.coeff(j).is_zero());
        }
    }

    // A star's line: r = 1, d = 3, one triple point.
    const LineCenter star_line(1, 3, {3});
    CHECK(line_contribution_chow(star_line) == line_contribution_explicit(star_line));

    Rng rng(42);
    for (int iter = 0; iter < 60; ++iter) {
        const auto c = random_center(rng);
        CHECK(line_contribution_chow(c) == line_contribution_explicit(c));
    }
}

TEST_CASE("bezout baseline") {
    for (std::int64_t d = 1; d <= 6; ++d) {
        const auto table = predegree_table(bezout_baseline(d));
        for (unsigned j = 0; j <= 8; ++j) CHECK(table[j] == Rational(ipow(Int(d), j)));
    }
}

TEST_CASE("assembly matches the closed form") {
    const auto single = LineConfiguration::from_coordinates({L(1, 0, 0)}, {3});
    const auto expect_single =
        TruncatedSeries(8, {Rational(1), Rational(3), Rational(Int(9), Int(2))});
    CHECK(assemble_bezout(single, EngineKind::explicit_blocks) == expect_single);
    CHECK(assemble_bezout(single, EngineKind::chow) == expect_single);

    const auto tri = LineConfiguration::from_coordinates({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1)}, {1, 1, 1});
    const auto tri_poly = closed_form_predegree(tri);
    CHECK(assemble_bezout(tri, EngineKind::explicit_blocks) == tri_poly);
    CHECK(assemble_bezout(tri, EngineKind::chow) == tri_poly);

    // Six lines with a quadruple point.
    const auto six = LineConfiguration::from_coordinates(
        {L(1, 0, 0), L(0, 1, 0), L(1, 1, 0), L(1, 2, 0), L(0, 0, 1), L(1, 1, 1)}, {1, 2, 1, 3, 1, 2});
    REQUIRE(six.points()[0].lines.size() == 4);
    const auto p6 = closed_form_predegree(six);
    CHECK(assemble_bezout(six, EngineKind::explicit_blocks) == p6);
    CHECK(assemble_bezout(six, EngineKind::chow) == p6);
}

TEST_CASE("triple-engine equivalence on random configurations") {
    Rng rng(43);
    for (int iter = 0; iter < 80; ++iter) {
        const auto cfg = (iter % 2) ? random_abstract_config(rng) : random_coordinate_config(rng);
        const auto closed = closed_form_predegree(cfg);
        CHECK(assemble_bezout(cfg, EngineKind::explicit_blocks) == closed);
        CHECK(assemble_bezout(cfg, EngineKind::chow) == closed);
    }
}

TEST_CASE("line centers of a real configuration cover the degree") {
    Rng rng(44);
    for (int iter = 0; iter < 30; ++iter) {
        const auto cfg = random_abstract_config(rng);
        if (cfg.line_count() < 2) continue;
        for (int i = 0; i < static_cast<int>(cfg.line_count()); ++i) {
            std::int64_t covered = 0;
            for (int j : cfg.points_on_line(i)) covered += cfg.point(j).mult - cfg.multiplicity(i);
            CHECK(covered == cfg.degree() - cfg.multiplicity(i));
        }
    }
}

TEST_CASE("serial and parallel assembly agree") {
    Rng rng(45);
    for (int iter = 0; iter < 12; ++iter) {
        const auto cfg = random_abstract_config(rng, 12, 6);
        for (auto kind : {EngineKind::explicit_blocks, EngineKind::chow})
            CHECK(assemble_bezout(cfg, kind, Exec::serial) == assemble_bezout(cfg, kind, Exec::parallel));
    }
}
