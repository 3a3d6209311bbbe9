#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linorb/rational.hpp"

namespace linorb {

/// A line a*x + b*y + c*z = 0 in the projective plane, stored as a primitive
/// integer coefficient vector (gcd 1, first nonzero entry positive) so that
/// equality of lines is structural equality.
struct RationalLine {
    std::array<Int, 3> coeffs;

    static RationalLine from_rationals(const Rational& a, const Rational& b, const Rational& c);
    static RationalLine from_ints(const Int& a, const Int& b, const Int& c);

    friend bool operator==(const RationalLine&, const RationalLine&) = default;
    friend auto operator<=>(const RationalLine& a, const RationalLine& b) {
        for (int i = 0; i < 3; ++i)
            if (int c = cmp(a.coeffs[i], b.coeffs[i]); c != 0) return c <=> 0;
        return std::strong_ordering::equal;
    }

    std::string str() const;
};

/// A point where two or more lines of the configuration meet. `mult` is the
/// total multiplicity of the point in the curve, the sum of the incident
/// line multiplicities.
struct IncidencePoint {
    std::vector<int> lines;  // sorted, size >= 2
    std::int64_t mult = 0;

    friend bool operator==(const IncidencePoint&, const IncidencePoint&) = default;
};

/// A configuration of distinct lines with positive multiplicities, together
/// with its complete pairwise incidence structure. Configurations come either
/// from exact coordinates (every pairwise intersection computed and grouped)
/// or from abstract incidence data (concurrency bundles, completed with
/// implicit two-line points); abstract ones carry no coordinates and are
/// formal inputs for the incidence-only formulas.
class LineConfiguration {
public:
    /// Builds from exact coordinates. Throws InvalidLine / DuplicateLine /
    /// InvalidMultiplicity.
    static LineConfiguration from_coordinates(std::vector<RationalLine> lines,
                                              std::vector<std::int64_t> mults);

    /// Builds from abstract incidence: bundles are the concurrent sets of
    /// size >= 3; every uncovered pair becomes an implicit double point.
    /// Throws InconsistentIncidence when two bundles share two lines.
    static LineConfiguration from_incidence(std::size_t n, std::vector<std::int64_t> mults,
                                            const std::vector<std::vector<int>>& bundles);

    std::size_t line_count() const { return mults_.size(); }
    std::int64_t multiplicity(int i) const { return mults_.at(i); }
    const std::vector<std::int64_t>& multiplicities() const { return mults_; }

    /// Total degree d = sum of multiplicities.
    std::int64_t degree() const { return degree_; }

    /// Dimension N = d(d+3)/2 of the space of degree-d plane curves.
    std::int64_t curve_space_dim() const { return degree_ * (degree_ + 3) / 2; }

    const std::vector<IncidencePoint>& points() const { return points_; }
    const IncidencePoint& point(int j) const { return points_.at(j); }

    /// Indices into points() of the points lying on line i.
    const std::vector<int>& points_on_line(int i) const { return on_line_.at(i); }

    bool has_coordinates() const { return coords_.has_value(); }

    /// Exact coordinates; throws NeedsCoordinates for abstract configurations.
    const std::vector<RationalLine>& coordinates() const;

private:
    LineConfiguration() = default;
    void finalize();  // sorts points canonically, fills mult and on_line_

    std::vector<std::int64_t> mults_;
    std::vector<IncidencePoint> points_;
    std::vector<std::vector<int>> on_line_;
    std::optional<std::vector<RationalLine>> coords_;
    std::int64_t degree_ = 0;
};

enum class ConfigTag { SingleLine, TwoLines, Star, Triangle, Fan, General };

std::string to_string(ConfigTag tag);

/// A fan's decomposition: the concurrent lines, the one line not through
/// their common point, and that line's multiplicity.
struct FanData {
    std::vector<int> star_lines;
    int odd_line = -1;
    std::int64_t odd_mult = 0;
};

/// Small-orbit classification. The orbit dimension is determined by the tag:
/// a single line moves in a 2-dimensional orbit, a pair in 4, a star in 5, a
/// triangle in 6, a fan in 7; everything else has the full 8-dimensional
/// orbit and is classed General.
struct ConfigClass {
    ConfigTag tag;
    int orbit_dim;
    std::optional<FanData> fan;
};

ConfigClass classify(const LineConfiguration& cfg);

/// rho_{alpha,ij}: (sum of the other multiplicities at point j)^alpha minus
/// the sum of their alpha-th powers. Zero exactly when line i meets the rest
/// of the configuration transversally at that point. Throws when point j
/// does not lie on line i.
Int rho(const LineConfiguration& cfg, int line, int point, unsigned alpha);

/// rho_{alpha,i}: the sum of rho_{alpha,ij} over the points on line i.
Int rho_line(const LineConfiguration& cfg, int line, unsigned alpha);

}  // namespace linorb
