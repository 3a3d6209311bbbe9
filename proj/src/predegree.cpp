#include "linorb/predegree.hpp"

#include <omp.h>

#include "linorb/errors.hpp"

namespace linorb {

namespace {

constexpr unsigned kCap = TruncatedSeries::kPlaneCap;

Int ipow(const Int& base, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// 1 + r t + r^2 t^2 / 2
TruncatedSeries line_factor(const Int& r, unsigned cap = kCap) {
    TruncatedSeries f = TruncatedSeries::one(cap);
    return f + TruncatedSeries::monomial(cap, 1, r) + TruncatedSeries::monomial(cap, 2, Rational(r * r, 2));
}

}  // namespace

SFunctions s_functions(const LineConfiguration& cfg, int line) {
    if (line < 0 || line >= static_cast<int>(cfg.line_count()))
        throw Error("line index " + std::to_string(line) + " out of range");
    Int rho_a[8];
    for (unsigned a = 2; a <= 7; ++a) rho_a[a] = rho_line(cfg, line, a);
    const Int r = cfg.multiplicity(line);
    const Int r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r, r6 = r5 * r;
    SFunctions s;
    s.s6 = -rho_a[5] * r - 5 * rho_a[4] * r2 + 10 * rho_a[3] * r3 + 5 * rho_a[2] * r4;
    s.s7 = 6 * rho_a[6] * r + 29 * rho_a[5] * r2 - 50 * rho_a[4] * r3 - 20 * rho_a[3] * r4 - rho_a[2] * r5;
    s.s8 = -21 * rho_a[7] * r - 99 * rho_a[6] * r2 + 155 * rho_a[5] * r3 + 55 * rho_a[4] * r4 + rho_a[3] * r5 -
           rho_a[2] * r6;
    return s;
}

TruncatedSeries closed_form_predegree(const LineConfiguration& cfg, Exec exec) {
    const long n = static_cast<long>(cfg.line_count());
    const Int d = cfg.degree();

    TruncatedSeries product = TruncatedSeries::one(kCap);
    for (long i = 0; i < n; ++i) product = product * line_factor(cfg.multiplicity(i));

    const auto correction_for = [&](long i) {
        const SFunctions s = s_functions(cfg, static_cast<int>(i));
        TruncatedSeries corr(kCap);
        corr = corr + TruncatedSeries::monomial(kCap, 6, Rational(s.s6, factorial(6)));
        corr = corr + TruncatedSeries::monomial(kCap, 7, Rational(s.s7, factorial(7)));
        corr = corr + TruncatedSeries::monomial(kCap, 8, Rational(s.s8, factorial(8)));
        return line_factor(d - cfg.multiplicity(i)) * corr;
    };

    TruncatedSeries total(kCap);
    if (exec == Exec::serial) {
        for (long i = 0; i < n; ++i) total = total + correction_for(i);
    } else {
#pragma omp parallel if (n > 8)
        {
            TruncatedSeries local(kCap);
#pragma omp for schedule(dynamic) nowait
            for (long i = 0; i < n; ++i) local = local + correction_for(i);
#pragma omp critical
            total = total + local;
        }
    }
    return product + total;
}

std::vector<Int> elementary_symmetric(const std::vector<std::int64_t>& values, unsigned upto) {
    std::vector<Int> e(upto + 1);
    e[0] = 1;
    for (auto v : values)
        for (unsigned j = upto; j >= 1; --j) e[j] += Int(v) * e[j - 1];
    return e;
}

TruncatedSeries star_predegree_poly(const std::vector<std::int64_t>& mults) {
    if (mults.empty()) throw InvalidMultiplicity("star needs at least one line");
    TruncatedSeries p = TruncatedSeries::one(kCap);
    for (auto r : mults) p = p * line_factor(Int(r));
    return p.truncate(5);
}

Int star_predegree(const std::vector<std::int64_t>& mults) {
    if (mults.size() < 3) throw Error("the scalar star formula needs 3 or more lines");
    const auto e = elementary_symmetric(mults, 5);
    return 30 * (e[2] * e[3] - e[1] * e[4] - e[5]);
}

TruncatedSeries fan_predegree_poly(const std::vector<std::int64_t>& star_mults, std::int64_t r) {
    if (star_mults.size() < 2) throw Error("a fan's star part needs at least 2 lines");
    if (r < 1) throw InvalidMultiplicity("transversal line multiplicity is below 1");
    return line_factor(Int(r)) * star_predegree_poly(star_mults);
}

Int fan_predegree(const std::vector<std::int64_t>& star_mults, std::int64_t r) {
    if (star_mults.size() < 3) throw Error("the scalar fan formula needs a star of 3 or more lines");
    const auto e = elementary_symmetric(star_mults, 5);
    return 630 * Int(r) * Int(r) * (e[2] * e[3] - e[1] * e[4] - e[5]);
}

TruncatedSeries multiply_transversal(const TruncatedSeries& p1, const TruncatedSeries& p2) {
    if (p1.cap() != kCap || p2.cap() != kCap)
        throw CapMismatch("transversal multiplication expects cap-8 polynomials");
    return p1 * p2;
}

Int transversal_simple_predegree(const std::vector<std::int64_t>& mults) {
    const auto e = elementary_symmetric(mults, 8);
    return 2520 * (e[4] * e[4] - 2 * e[2] * e[6] + 2 * e[8]);
}

}  // namespace linorb
