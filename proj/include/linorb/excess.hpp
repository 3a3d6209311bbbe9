#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "linorb/configuration.hpp"
#include "linorb/exec.hpp"
#include "linorb/series.hpp"

namespace linorb {

/// Blow-up center over an intersection point: the point's total multiplicity
/// m in the curve and the configuration degree d.
struct PointCenter {
    std::int64_t m, d;

    PointCenter(std::int64_t m_, std::int64_t d_);
};

/// Blow-up center over a line of multiplicity r: the configuration degree d
/// and the total multiplicities m_u of the intersection points on the line.
struct LineCenter {
    std::int64_t r, d;
    std::vector<std::int64_t> point_mults;

    LineCenter(std::int64_t r_, std::int64_t d_, std::vector<std::int64_t> point_mults_);
};

/// Class on the blown-up P^5 sitting over a line's center: a polynomial in
/// the hyperplane class l and the exceptional classes e_u, graded by total
/// degree <= 5. Products of distinct exceptional classes vanish identically,
/// so a class splits into a pure part (powers of l) and one slice per u
/// (monomials l^a e_u^b with b >= 1).
class BlownP5Element {
public:
    explicit BlownP5Element(std::size_t exceptional_count);

    static BlownP5Element constant(std::size_t s, const Rational& c);
    static BlownP5Element hyperplane(std::size_t s);                 // l
    static BlownP5Element exceptional(std::size_t s, std::size_t u); // e_u

    std::size_t exceptional_count() const { return mixed_.size(); }

    /// Coefficient of l^a (a <= 5).
    const Rational& pure(unsigned a) const { return pure_[a]; }
    /// Coefficient of l^a e_u^b (b >= 1, a+b <= 5).
    const Rational& mixed(std::size_t u, unsigned a, unsigned b) const;

    Rational& pure(unsigned a) { return pure_[a]; }
    Rational& mixed(std::size_t u, unsigned a, unsigned b);

    BlownP5Element operator-() const;
    friend BlownP5Element operator+(const BlownP5Element& x, const BlownP5Element& y);
    friend BlownP5Element operator*(const BlownP5Element& x, const BlownP5Element& y);
    friend BlownP5Element operator*(const Rational& c, BlownP5Element x);

    BlownP5Element pow(unsigned e) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    BlownP5Element reciprocal() const;

    friend bool operator==(const BlownP5Element&, const BlownP5Element&) = default;

private:
    // pure_[a] is the l^a coefficient; mixed_[u][b][a] the l^a e_u^b one.
    std::array<Rational, 6> pure_;
    std::vector<std::array<std::array<Rational, 6>, 6>> mixed_;
};

/// Degree of the degree-5 part of cls under the pushforward rules
/// l^5 -> 1 and l^(5-b) e^b -> (1,0,0,1,3,6)[b]; lower-degree parts are
/// ignored, since integration only reads the top degree.
Rational chow_integral_blown_p5(const BlownP5Element& cls);

/// Engine B blocks: the printed contribution polynomials per blow-up center.
TruncatedSeries point_contribution_explicit(std::int64_t m, std::int64_t d);
TruncatedSeries line_contribution_explicit(const LineCenter& c);

/// Engine C: the same contributions evaluated as excess-intersection
/// integrals, over P^2 for points and over the blown-up P^5 for lines.
TruncatedSeries point_contribution_chow(std::int64_t m, std::int64_t d);
TruncatedSeries line_contribution_chow(const LineCenter& c);

enum class EngineKind { explicit_blocks, chow };

/// The uncorrected product in P^8: sum of d^j t^j / j!.
TruncatedSeries bezout_baseline(std::int64_t d);

/// Full excess-intersection assembly: the Bezout baseline minus every point
/// and line contribution, computed by the chosen engine. Equals the closed
/// form coefficient by coefficient on every valid configuration.
TruncatedSeries assemble_bezout(const LineConfiguration& cfg, EngineKind engine,
                                Exec exec = Exec::parallel);

}  // namespace linorb
