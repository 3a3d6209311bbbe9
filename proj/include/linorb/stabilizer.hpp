#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linorb/configuration.hpp"
#include "linorb/exec.hpp"
#include "linorb/series.hpp"

namespace linorb {

/// A point of P^(N-1) as a primitive integer vector with sign-canonical
/// first nonzero entry, so projective equality is structural equality.
template <int N>
struct ProjPoint {
    std::array<Int, N> v{};

    void canonicalize();

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) {
        for (int i = 0; i < N; ++i)
            if (int c = cmp(a.v[i], b.v[i]); c != 0) return c <=> 0;
        return std::strong_ordering::equal;
    }
};

/// An element of PGL(N) over the rationals: an N x N integer matrix with
/// nonzero determinant, canonicalized up to scale (primitive entries, first
/// nonzero entry positive). Equality of group elements is structural.
template <int N>
struct ProjMatrix {
    std::array<std::array<Int, N>, N> m{};

    static ProjMatrix identity();

    void canonicalize();
    Int det() const;

    /// The adjugate, which represents the inverse in PGL.
    ProjMatrix adjugate() const;

    ProjPoint<N> apply(const ProjPoint<N>& p) const;

    friend ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b) {
        ProjMatrix out;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) out.m[i][j] += a.m[i][k] * b.m[k][j];
        out.canonicalize();
        return out;
    }

    friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
    friend auto operator<=>(const ProjMatrix& a, const ProjMatrix& b) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (int c = cmp(a.m[i][j], b.m[i][j]); c != 0) return c <=> 0;
        return std::strong_ordering::equal;
    }

    std::string str() const;
};

using Pgl2Element = ProjMatrix<2>;
using Pgl3Element = ProjMatrix<3>;

template <int N>
struct WeightedPoint {
    ProjPoint<N> point;
    std::int64_t weight = 1;
};

/// Pairwise-distinct projective points with positive integer weights.
template <int N>
using WeightedPointSet = std::vector<WeightedPoint<N>>;

/// The finite subgroup of PGL(2) preserving a weighted point set of P^1 with
/// >= 3 points (fewer points leave a positive-dimensional stabilizer, which
/// is an error here). Enumerated exactly: every ordered triple with weights
/// matching a fixed base triple determines one candidate projectivity, and
/// the candidates preserving the whole set form the group.
std::vector<Pgl2Element> pgl2_stabilizer(const WeightedPointSet<2>& ps, Exec exec = Exec::parallel);

/// Same enumeration in the plane, anchored on a quadruple of points in
/// general position (no 3 collinear). Throws NotApplicable when no such
/// quadruple exists.
std::vector<Pgl3Element> pgl3_stabilizer(const WeightedPointSet<3>& ps, Exec exec = Exec::parallel);

/// The concurrent lines of a star (or a fan's star part) seen as weighted
/// points of the pencil through their common point, in coordinates given by
/// the first two lines of the bundle. Requires coordinates.
WeightedPointSet<2> star_pencil_points(const LineConfiguration& cfg, const std::vector<int>& star_lines);

/// The configuration's lines as weighted points of the dual plane. The
/// stabilizer computed there has the same order as the stabilizer of the
/// configuration itself (the two groups are isomorphic via g -> (g^-1)^T).
WeightedPointSet<3> dual_points(const LineConfiguration& cfg);

/// Dimension of the orbit, read off the classification.
int orbit_dimension(const LineConfiguration& cfg);

struct StabilizerReport {
    ConfigTag tag = ConfigTag::General;
    int orbit_dim = 8;
    /// Number of connected components of the stabilizer (= the order of the
    /// finite quotient group, or of the whole stabilizer when it is finite).
    Int components;
    /// Predegree at the orbit dimension divided by the component count.
    Int orbit_degree;
    /// The enumerated finite group, when the classification routes through
    /// one of the enumerations.
    std::optional<std::vector<Pgl2Element>> pencil_elements;
    std::optional<std::vector<Pgl3Element>> dual_elements;
};

/// Component count and orbit-closure degree for a configuration whose
/// adjusted predegree polynomial is p. Star, fan and general configurations
/// need coordinates; the rest are pure multiplicity symmetry.
StabilizerReport component_count(const LineConfiguration& cfg, const TruncatedSeries& p,
                                 Exec exec = Exec::parallel);

}  // namespace linorb
