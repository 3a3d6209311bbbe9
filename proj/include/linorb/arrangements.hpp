#pragma once

#include <cstdint>
#include <vector>

#include "linorb/series.hpp"

namespace linorb {

/// A transversal (general-position) arrangement of multiple hyperplanes in
/// projective n-space. Only transversal arrangements are supported: the
/// correction terms for non-transversal higher-dimensional arrangements are
/// not known here.
struct HyperplaneArrangement {
    int dim;                           // ambient dimension n >= 1
    std::vector<std::int64_t> mults;   // one positive multiplicity per hyperplane

    HyperplaneArrangement(int dim_, std::vector<std::int64_t> mults_);

    /// Cap of the associated series: n^2 + 2n, the dimension of PGL(n+1).
    unsigned series_cap() const { return static_cast<unsigned>(dim * dim + 2 * dim); }
};

/// Adjusted predegree polynomial of the arrangement: the truncated product
/// over the hyperplanes of sum_{k<=n} r^k t^k / k!.
TruncatedSeries hyperplane_predegree(const HyperplaneArrangement& arr);

/// Top predegree: (n^2+2n)! times the top coefficient.
Int hyperplane_top_predegree(const HyperplaneArrangement& arr);

/// Degree of the orbit closure of d >= 5 simple planes in general position
/// in P^3, as a closed-form degree-15 polynomial in d; 0 for d <= 4.
Int p3_simple_degree_formula(std::int64_t d);

}  // namespace linorb
