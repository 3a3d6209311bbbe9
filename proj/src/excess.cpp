#include "linorb/excess.hpp"

#include <omp.h>

#include "linorb/errors.hpp"

namespace linorb {

namespace {

constexpr unsigned kCap = TruncatedSeries::kPlaneCap;

Int ipow(std::int64_t base, unsigned e) {
    Int out, b(base);
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

// Sums count independent cap-8 terms, serially or under OpenMP. Exact
// arithmetic makes the accumulation order irrelevant.
template <typename Term>
TruncatedSeries sum_terms(long count, Exec exec, const Term& term) {
    TruncatedSeries total(kCap);
    if (exec == Exec::serial) {
        for (long i = 0; i < count; ++i) total = total + term(i);
        return total;
    }
#pragma omp parallel if (count > 8)
    {
        TruncatedSeries local(kCap);
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < count; ++i) local = local + term(i);
#pragma omp critical
        total = total + local;
    }
    return total;
}

}  // namespace

PointCenter::PointCenter(std::int64_t m_, std::int64_t d_) : m(m_), d(d_) {
    if (m < 2) throw Error("point center multiplicity must be at least 2");
    if (m > d) throw Error("point center multiplicity exceeds the configuration degree");
}

LineCenter::LineCenter(std::int64_t r_, std::int64_t d_, std::vector<std::int64_t> point_mults_)
    : r(r_), d(d_), point_mults(std::move(point_mults_)) {
    if (r < 1) throw InvalidMultiplicity("line center multiplicity is below 1");
    if (d < r) throw Error("line center degree below its own multiplicity");
    for (auto m : point_mults)
        if (m < r + 1 || m > d) throw Error("point multiplicity on a line center out of range");
}

BlownP5Element::BlownP5Element(std::size_t s) : mixed_(s) {}

BlownP5Element BlownP5Element::constant(std::size_t s, const Rational& c) {
    BlownP5Element x(s);
    x.pure_[0] = c;
    return x;
}

BlownP5Element BlownP5Element::hyperplane(std::size_t s) {
    BlownP5Element x(s);
    x.pure_[1] = 1;
    return x;
}

BlownP5Element BlownP5Element::exceptional(std::size_t s, std::size_t u) {
    BlownP5Element x(s);
    x.mixed(u, 0, 1) = 1;
    return x;
}

const Rational& BlownP5Element::mixed(std::size_t u, unsigned a, unsigned b) const {
    if (b == 0 || a + b > 5) throw Error("exceptional monomial index out of range");
    return mixed_.at(u)[b][a];
}

Rational& BlownP5Element::mixed(std::size_t u, unsigned a, unsigned b) {
    if (b == 0 || a + b > 5) throw Error("exceptional monomial index out of range");
    return mixed_.at(u)[b][a];
}

BlownP5Element BlownP5Element::operator-() const {
    BlownP5Element out = *this;
    for (auto& c : out.pure_) c = -c;
    for (auto& slice : out.mixed_)
        for (auto& row : slice)
            for (auto& c : row) c = -c;
    return out;
}

BlownP5Element operator+(const BlownP5Element& x, const BlownP5Element& y) {
    if (x.mixed_.size() != y.mixed_.size()) throw Error("exceptional class counts differ");
    BlownP5Element out = x;
    for (unsigned a = 0; a <= 5; ++a) out.pure_[a] += y.pure_[a];
    for (std::size_t u = 0; u < y.mixed_.size(); ++u)
        for (unsigned b = 0; b <= 5; ++b)
            for (unsigned a = 0; a <= 5; ++a) out.mixed_[u][b][a] += y.mixed_[u][b][a];
    return out;
}

BlownP5Element operator*(const BlownP5Element& x, const BlownP5Element& y) {
    if (x.mixed_.size() != y.mixed_.size()) throw Error("exceptional class counts differ");
    const std::size_t s = x.mixed_.size();
    BlownP5Element out(s);
    for (unsigned a = 0; a <= 5; ++a) {
        if (x.pure_[a].is_zero()) continue;
        for (unsigned b = 0; a + b <= 5; ++b) {
            if (y.pure_[b].is_zero()) continue;
            out.pure_[a + b] += x.pure_[a] * y.pure_[b];
        }
    }
    // Slices only interact with the pure parts and with themselves; cross
    // terms e_u e_v vanish for u != v.
    for (std::size_t u = 0; u < s; ++u) {
        for (unsigned b1 = 0; b1 <= 5; ++b1) {
            for (unsigned a1 = 0; a1 + b1 <= 5; ++a1) {
                const Rational& xv = (b1 == 0) ? x.pure_[a1] : x.mixed_[u][b1][a1];
                if (xv.is_zero()) continue;
                for (unsigned b2 = (b1 == 0) ? 1u : 0u; b1 + b2 <= 5; ++b2) {
                    if (b1 == 0 && b2 == 0) continue;
                    for (unsigned a2 = 0; a1 + b1 + a2 + b2 <= 5; ++a2) {
                        const Rational& yv = (b2 == 0) ? y.pure_[a2] : y.mixed_[u][b2][a2];
                        if (yv.is_zero()) continue;
                        out.mixed_[u][b1 + b2][a1 + a2] += xv * yv;
                    }
                }
            }
        }
    }
    return out;
}

BlownP5Element operator*(const Rational& c, BlownP5Element x) {
    for (auto& v : x.pure_) v *= c;
    for (auto& slice : x.mixed_)
        for (auto& row : slice)
            for (auto& v : row) v *= c;
    return x;
}

BlownP5Element BlownP5Element::pow(unsigned e) const {
    BlownP5Element out = constant(mixed_.size(), 1);
    BlownP5Element base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

BlownP5Element BlownP5Element::reciprocal() const {
    if (pure_[0].is_zero()) throw Error("class has no unit constant term");
    // X = c (1 + N) with N of positive degree, so N^6 = 0 and the Neumann
    // series terminates.
    const Rational c = pure_[0];
    BlownP5Element n = (Rational(1) / c) * *this;
    n.pure_[0] = 0;
    BlownP5Element out = constant(mixed_.size(), 1);
    BlownP5Element term = constant(mixed_.size(), 1);
    for (int k = 0; k < 5; ++k) {
        term = term * -n;
        out = out + term;
    }
    return (Rational(1) / c) * out;
}

Rational chow_integral_blown_p5(const BlownP5Element& cls) {
    // Pushforward degrees of e^b at top degree: e^3 -> l^3, e^4 -> 3 l^4,
    // e^5 -> 6 l^5. These are the Segre numbers of a linear P^2 inside P^5:
    // integrating l^(5-b) e^b against s(N) = (1+k)^-3 on the center gives the
    // coefficients 1, 3, 6 for b = 3, 4, 5 and zero for b = 1, 2.
    static const std::array<Rational, 6> push = {Rational(1), Rational(0), Rational(0),
                                                 Rational(1), Rational(3), Rational(6)};
    Rational total = cls.pure(5);
    for (std::size_t u = 0; u < cls.exceptional_count(); ++u)
        for (unsigned b = 1; b <= 5; ++b) {
            if (push[b].is_zero()) continue;
            total += cls.mixed(u, 5 - b, b) * push[b];
        }
    return total;
}

TruncatedSeries point_contribution_explicit(std::int64_t m, std::int64_t d) {
    PointCenter center(m, d);
    const Int m6 = ipow(m, 6), m7 = ipow(m, 7), m8 = ipow(m, 8);
    const Int dI(d);
    TruncatedSeries out(kCap);
    out = out + TruncatedSeries::monomial(kCap, 6, Rational(m6, factorial(6)));
    out = out + TruncatedSeries::monomial(kCap, 7, Rational(7 * dI * m6 - 6 * m7, factorial(7)));
    out = out + TruncatedSeries::monomial(kCap, 8, Rational(28 * dI * dI * m6 - 48 * dI * m7 + 21 * m8, factorial(8)));
    return out;
}

TruncatedSeries point_contribution_chow(std::int64_t m, std::int64_t d) {
    PointCenter center(m, d);
    // Integral over the P^2 center of k^(8-a) (m + d k)^a / (1+k)^6 per
    // degree a: only the coefficient of k^2 survives, so a >= 6.
    TruncatedSeries base(kCap);
    base = base + TruncatedSeries::monomial(kCap, 0, Int(m)) + TruncatedSeries::monomial(kCap, 1, Int(d));
    TruncatedSeries chern = TruncatedSeries::one(kCap) + TruncatedSeries::monomial(kCap, 1, 1);
    const TruncatedSeries inv = chern.pow(6).reciprocal();
    TruncatedSeries out(kCap);
    for (unsigned a = 6; a <= kCap; ++a) {
        const TruncatedSeries integrand = base.pow(a) * inv;
        out = out + TruncatedSeries::monomial(kCap, a, integrand.coeff(a - 6) * Rational(Int(1), factorial(a)));
    }
    return out;
}

TruncatedSeries line_contribution_explicit(const LineCenter& c) {
    const Int r(c.r), d(c.d);
    const Int r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r;
    const Int d2 = d * d, d3 = d2 * d, d4 = d3 * d, d5 = d4 * d;

    TruncatedSeries out(kCap);
    out = out + TruncatedSeries::monomial(kCap, 3, Rational(r3, factorial(3)));
    out = out + TruncatedSeries::monomial(kCap, 4, Rational(r3 * (4 * d - 3 * r), factorial(4)));
    out = out + TruncatedSeries::monomial(kCap, 5, Rational(r3 * (10 * d2 - 15 * d * r + 6 * r2), factorial(5)));
    out = out + TruncatedSeries::monomial(kCap, 6,
                                          Rational(r3 * (20 * d3 - 45 * d2 * r + 36 * d * r2 - 10 * r3), factorial(6)));
    out = out + TruncatedSeries::monomial(
                    kCap, 7,
                    Rational(r3 * (35 * d4 - 105 * d3 * r + 126 * d2 * r2 - 70 * d * r3 + 15 * r4), factorial(7)));
    out = out + TruncatedSeries::monomial(
                    kCap, 8,
                    Rational(r3 * (56 * d5 - 210 * d4 * r + 336 * d3 * r2 - 280 * d2 * r3 + 120 * d * r4 - 21 * r5),
                             factorial(8)));

    for (auto mu : c.point_mults) {
        const Int m(mu);
        const Int m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m;
        out = out - TruncatedSeries::monomial(
                        kCap, 6, Rational(r3 * (20 * m3 - 45 * m2 * r + 36 * m * r2 - 10 * r3), factorial(6)));
        out = out - TruncatedSeries::monomial(
                        kCap, 7,
                        Rational(r3 * (140 * d * m3 - 105 * m4 - 315 * d * m2 * r + 210 * m3 * r + 252 * d * m * r2 -
                                       126 * m2 * r2 - 70 * d * r3 + 15 * r4),
                                 factorial(7)));
        out = out - TruncatedSeries::monomial(
                        kCap, 8,
                        Rational(r3 * (560 * d2 * m3 - 840 * d * m4 + 336 * m5 - 1260 * d2 * m2 * r +
                                       1680 * d * m3 * r - 630 * m4 * r + 1008 * d2 * m * r2 - 1008 * d * m2 * r2 +
                                       336 * m3 * r2 - 280 * d2 * r3 + 120 * d * r4 - 21 * r5),
                                 factorial(8)));
    }
    return out;
}

TruncatedSeries line_contribution_chow(const LineCenter& c) {
    const std::size_t s = c.point_mults.size();

    // c(N) = (1 + l - e_1 - ... - e_s)^3, inverted inside the blown-up ring.
    BlownP5Element chern = BlownP5Element::constant(s, 1) + BlownP5Element::hyperplane(s);
    for (std::size_t u = 0; u < s; ++u) chern = chern + -BlownP5Element::exceptional(s, u);
    const BlownP5Element inv = chern.pow(3).reciprocal();

    // Pullback of the point-condition class plus r times the center:
    // r + d l - m_1 e_1 - ... - m_s e_s.
    BlownP5Element cls = BlownP5Element::constant(s, Int(c.r));
    cls = cls + Rational(Int(c.d)) * BlownP5Element::hyperplane(s);
    for (std::size_t u = 0; u < s; ++u)
        cls = cls + Rational(-Int(c.point_mults[u])) * BlownP5Element::exceptional(s, u);

    // integral of l^(8-j) X^j / c(N): multiplying by l^(8-j) selects the
    // degree j-3 part, so only j >= 3 contributes.
    TruncatedSeries out(kCap);
    BlownP5Element power = BlownP5Element::constant(s, 1);
    for (unsigned j = 0; j <= kCap; ++j) {
        if (j >= 3) {
            const BlownP5Element integrand = BlownP5Element::hyperplane(s).pow(8 - j) * (power * inv);
            out = out + TruncatedSeries::monomial(kCap, j,
                                                  chow_integral_blown_p5(integrand) * Rational(Int(1), factorial(j)));
        }
        power = power * cls;
    }
    return out;
}

TruncatedSeries bezout_baseline(std::int64_t d) {
    TruncatedSeries out(kCap);
    for (unsigned j = 0; j <= kCap; ++j)
        out = out + TruncatedSeries::monomial(kCap, j, Rational(ipow(d, j), factorial(j)));
    return out;
}

TruncatedSeries assemble_bezout(const LineConfiguration& cfg, EngineKind engine, Exec exec) {
    const std::int64_t d = cfg.degree();
    const long npts = static_cast<long>(cfg.points().size());
    const long nlines = static_cast<long>(cfg.line_count());

    const TruncatedSeries points = sum_terms(npts, exec, [&](long j) {
        const auto& p = cfg.points()[j];
        return engine == EngineKind::explicit_blocks ? point_contribution_explicit(p.mult, d)
                                                     : point_contribution_chow(p.mult, d);
    });
    const TruncatedSeries lines = sum_terms(nlines, exec, [&](long i) {
        std::vector<std::int64_t> pm;
        pm.reserve(cfg.points_on_line(i).size());
        for (int j : cfg.points_on_line(i)) pm.push_back(cfg.points()[j].mult);
        const LineCenter center(cfg.multiplicity(i), d, std::move(pm));
        return engine == EngineKind::explicit_blocks ? line_contribution_explicit(center)
                                                     : line_contribution_chow(center);
    });
    return bezout_baseline(d) - points - lines;
}

}  // namespace linorb
