#pragma once

#include <cstdint>
#include <vector>

#include "linorb/configuration.hpp"
#include "linorb/exec.hpp"
#include "linorb/series.hpp"

namespace linorb {

/// Per-line correction coefficients for the degree-6, 7 and 8 terms of the
/// adjusted predegree polynomial, built from the rho functions. All three
/// vanish when the line meets the rest of the configuration transversally.
struct SFunctions {
    Int s6, s7, s8;

    friend bool operator==(const SFunctions&, const SFunctions&) = default;
};

SFunctions s_functions(const LineConfiguration& cfg, int line);

/// The closed-form engine: the product of the per-line factors
/// 1 + r t + r^2 t^2/2 plus the per-line S-corrections weighted by
/// 1 + (d-r) t + (d-r)^2 t^2/2, truncated to t^8.
TruncatedSeries closed_form_predegree(const LineConfiguration& cfg, Exec exec = Exec::parallel);

/// e_0..e_upto of the given values (e_j = 0 beyond the count). Named in full
/// to keep it apart from the exceptional classes of the excess module.
std::vector<Int> elementary_symmetric(const std::vector<std::int64_t>& values, unsigned upto);

/// Star fast path: the per-line product truncated to t^5 (cap stays 8).
TruncatedSeries star_predegree_poly(const std::vector<std::int64_t>& mults);

/// Scalar predegree 30 (e2 e3 - e1 e4 - e5) of a star with >= 3 lines.
Int star_predegree(const std::vector<std::int64_t>& mults);

/// Fan fast path: the transversal line's factor times the truncated star
/// product.
TruncatedSeries fan_predegree_poly(const std::vector<std::int64_t>& star_mults, std::int64_t r);

/// Scalar predegree 630 r^2 (e2 e3 - e1 e4 - e5) of a fan whose star part
/// has >= 3 lines.
Int fan_predegree(const std::vector<std::int64_t>& star_mults, std::int64_t r);

/// Predegree polynomial of the union of two transversally-meeting
/// configurations: the truncated product of their polynomials. Caps must be 8.
TruncatedSeries multiply_transversal(const TruncatedSeries& p1, const TruncatedSeries& p2);

/// Top predegree 2520 (e4^2 - 2 e2 e6 + 2 e8) of a pairwise-transversal
/// configuration with the given multiplicities.
Int transversal_simple_predegree(const std::vector<std::int64_t>& mults);

}  // namespace linorb
