#pragma once

#include <string>
#include <vector>

#include "linorb/rational.hpp"

namespace linorb {

/// Power series in one variable t over the rationals, truncated at a fixed
/// cap: exactly cap+1 coefficients are stored and arithmetic never produces
/// terms above the cap. The cap defaults to 8 (the dimension of the group of
/// plane projectivities) but is a constructor parameter so the same type
/// serves hyperplane arrangements, where the cap is n^2+2n.
class TruncatedSeries {
public:
    static constexpr unsigned kPlaneCap = 8;

    /// Zero series with the given cap.
    explicit TruncatedSeries(unsigned cap);

    /// Series with the given coefficients (index = exponent); missing entries
    /// are zero. Throws if more than cap+1 coefficients are supplied.
    TruncatedSeries(unsigned cap, std::vector<Rational> coeffs);

    static TruncatedSeries one(unsigned cap);
    static TruncatedSeries monomial(unsigned cap, unsigned k, const Rational& c);

    unsigned cap() const { return cap_; }
    const Rational& coeff(unsigned j) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    /// Degree of the highest nonzero coefficient; -1 for the zero series.
    int degree() const;

    /// Coefficients above k zeroed, cap unchanged. Throws for k > cap.
    TruncatedSeries truncate(unsigned k) const;

    /// Same coefficients re-homed under a new cap (dropping or zero-padding).
    TruncatedSeries recap(unsigned new_cap) const;

    /// Multiplicative inverse up to the cap; requires a nonzero constant term.
    TruncatedSeries reciprocal() const;

    TruncatedSeries pow(unsigned e) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries s);
    friend TruncatedSeries operator*(TruncatedSeries s, const Rational& c) { return c * std::move(s); }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    /// Human-readable form, e.g. "1 + 3 t + 9/2 t^2".
    std::string str() const;

private:
    unsigned cap_;
    std::vector<Rational> coeffs_;  // size cap_+1
};

/// Entry j is coeff(j) * j!, the predegree f_j * d_j of a configuration whose
/// adjusted predegree polynomial is p. Entries of any engine output are
/// nonnegative integers.
std::vector<Rational> predegree_table(const TruncatedSeries& p);

}  // namespace linorb
