#pragma once

// Shared generators and independent oracles for the test suites. Everything
// here stays independent of the implementation paths it is used to check:
// binomials are computed by the Pascal recurrence, configurations are built
// through the public constructors only.

#include <algorithm>
#include <random>
#include <vector>

#include "linorb/configuration.hpp"
#include "linorb/rational.hpp"
#include "linorb/series.hpp"

namespace linorb::testing {

using Rng = std::mt19937_64;

inline Int ipow(const Int& base, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

inline Rational random_rational(Rng& rng, long max_abs = 20, long max_den = 12) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(Int(num(rng)), Int(den(rng)));
}

inline TruncatedSeries random_series(Rng& rng, unsigned cap) {
    std::vector<Rational> coeffs(cap + 1);
    for (auto& c : coeffs) c = random_rational(rng);
    return TruncatedSeries(cap, std::move(coeffs));
}

inline std::vector<std::int64_t> random_mults(Rng& rng, std::size_t n, std::int64_t max_mult = 5) {
    std::uniform_int_distribution<std::int64_t> m(1, max_mult);
    std::vector<std::int64_t> out(n);
    for (auto& r : out) r = m(rng);
    return out;
}

// Abstract configuration with random concurrency bundles; any two bundles
// share at most one line.
inline LineConfiguration random_abstract_config(Rng& rng, std::size_t max_lines = 7,
                                                std::int64_t max_mult = 5) {
    std::uniform_int_distribution<std::size_t> nd(1, max_lines);
    const std::size_t n = nd(rng);
    const auto mults = random_mults(rng, n, max_mult);

    std::vector<std::vector<int>> bundles;
    if (n >= 3) {
        std::uniform_int_distribution<int> count(0, 3);
        std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1);
        const int want = count(rng);
        for (int b = 0; b < want; ++b) {
            std::uniform_int_distribution<std::size_t> szd(3, std::min<std::size_t>(n, 5));
            const std::size_t sz = szd(rng);
            std::vector<int> cand;
            while (cand.size() < sz) {
                const int i = idx(rng);
                if (std::find(cand.begin(), cand.end(), i) == cand.end()) cand.push_back(i);
            }
            std::sort(cand.begin(), cand.end());
            bool ok = true;
            for (const auto& other : bundles) {
                std::vector<int> common;
                std::set_intersection(cand.begin(), cand.end(), other.begin(), other.end(),
                                      std::back_inserter(common));
                if (common.size() > 1) ok = false;
            }
            if (ok) bundles.push_back(std::move(cand));
        }
    }
    return LineConfiguration::from_incidence(n, mults, bundles);
}

inline RationalLine line_through(const std::array<long, 3>& p, const std::array<long, 3>& q) {
    return RationalLine::from_ints(Int(p[1]) * q[2] - Int(p[2]) * q[1], Int(p[2]) * q[0] - Int(p[0]) * q[2],
                                   Int(p[0]) * q[1] - Int(p[1]) * q[0]);
}

// Coordinate configuration with genuine concurrences: a few random centers,
// several lines drawn through each, plus generic extras. Incidence is then
// recomputed exactly from the coordinates, so accidental extra concurrences
// are harmless.
inline LineConfiguration random_coordinate_config(Rng& rng, std::size_t max_lines = 7,
                                                  std::int64_t max_mult = 5) {
    std::uniform_int_distribution<long> coord(-9, 9);
    const auto random_point = [&] { return std::array<long, 3>{coord(rng), coord(rng), coord(rng)}; };

    std::vector<RationalLine> lines;
    const auto push_unique = [&](const std::array<long, 3>& p, const std::array<long, 3>& q) {
        if (p == q) return;
        if (Int(p[1]) * q[2] - Int(p[2]) * q[1] == 0 && Int(p[2]) * q[0] - Int(p[0]) * q[2] == 0 &&
            Int(p[0]) * q[1] - Int(p[1]) * q[0] == 0)
            return;  // same projective point
        const RationalLine l = line_through(p, q);
        if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
    };

    std::uniform_int_distribution<std::size_t> nd(1, max_lines);
    const std::size_t n = nd(rng);
    std::uniform_int_distribution<int> centers_d(0, 2);
    const int centers = centers_d(rng);
    for (int c = 0; c < centers && lines.size() < n; ++c) {
        const auto center = random_point();
        std::uniform_int_distribution<int> through_d(2, 4);
        const int through = through_d(rng);
        for (int t = 0; t < through && lines.size() < n; ++t) push_unique(center, random_point());
    }
    while (lines.size() < n) push_unique(random_point(), random_point());

    return LineConfiguration::from_coordinates(lines, random_mults(rng, n, max_mult));
}

// Random invertible integer matrix, used as a projective change of
// coordinates acting on line coefficient vectors.
inline std::array<std::array<Int, 3>, 3> random_projectivity(Rng& rng) {
    std::uniform_int_distribution<long> entry(-5, 5);
    while (true) {
        std::array<std::array<Int, 3>, 3> m;
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        const Int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (sgn(det) != 0) return m;
    }
}

inline LineConfiguration transform_config(const LineConfiguration& cfg,
                                          const std::array<std::array<Int, 3>, 3>& m) {
    std::vector<RationalLine> lines;
    for (const auto& l : cfg.coordinates()) {
        const auto& v = l.coeffs;
        lines.push_back(RationalLine::from_ints(m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
                                                m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
                                                m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]));
    }
    return LineConfiguration::from_coordinates(lines, cfg.multiplicities());
}

}  // namespace linorb::testing
