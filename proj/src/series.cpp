#include "linorb/series.hpp"

#include <sstream>
#include <utility>

#include "linorb/errors.hpp"

namespace linorb {

TruncatedSeries::TruncatedSeries(unsigned cap) : cap_(cap), coeffs_(cap + 1) {}

TruncatedSeries::TruncatedSeries(unsigned cap, std::vector<Rational> coeffs) : cap_(cap), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > cap_ + 1) throw Error("more coefficients than the cap admits");
    coeffs_.resize(cap_ + 1);
}

TruncatedSeries TruncatedSeries::one(unsigned cap) { return monomial(cap, 0, 1); }

TruncatedSeries TruncatedSeries::monomial(unsigned cap, unsigned k, const Rational& c) {
    TruncatedSeries s(cap);
    if (k > cap) throw Error("monomial exponent above cap");
    s.coeffs_[k] = c;
    return s;
}

const Rational& TruncatedSeries::coeff(unsigned j) const {
    if (j > cap_) throw Error("coefficient index above cap");
    return coeffs_[j];
}

bool TruncatedSeries::is_zero() const { return degree() < 0; }

int TruncatedSeries::degree() const {
    for (int j = static_cast<int>(cap_); j >= 0; --j)
        if (!coeffs_[j].is_zero()) return j;
    return -1;
}

TruncatedSeries TruncatedSeries::truncate(unsigned k) const {
    if (k > cap_) throw Error("truncation point above cap");
    TruncatedSeries out(cap_);
    for (unsigned j = 0; j <= k; ++j) out.coeffs_[j] = coeffs_[j];
    return out;
}

TruncatedSeries TruncatedSeries::recap(unsigned new_cap) const {
    TruncatedSeries out(new_cap);
    for (unsigned j = 0; j <= std::min(cap_, new_cap); ++j) out.coeffs_[j] = coeffs_[j];
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (coeffs_[0].is_zero()) throw Error("series has no unit constant term");
    // b_0 = 1/a_0, then b_n = -(sum_{k=1..n} a_k b_{n-k}) / a_0.
    TruncatedSeries out(cap_);
    out.coeffs_[0] = Rational(1) / coeffs_[0];
    for (unsigned n = 1; n <= cap_; ++n) {
        Rational acc;
        for (unsigned k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
        out.coeffs_[n] = -acc / coeffs_[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries out = one(cap_);
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.cap_ != b.cap_) throw CapMismatch("series caps differ in addition");
    TruncatedSeries out(a.cap_);
    for (unsigned j = 0; j <= a.cap_; ++j) out.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.cap_ != b.cap_) throw CapMismatch("series caps differ in subtraction");
    TruncatedSeries out(a.cap_);
    for (unsigned j = 0; j <= a.cap_; ++j) out.coeffs_[j] = a.coeffs_[j] - b.coeffs_[j];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.cap_ != b.cap_) throw CapMismatch("series caps differ in multiplication");
    TruncatedSeries out(a.cap_);
    for (unsigned i = 0; i <= a.cap_; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= a.cap_; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries operator*(const Rational& c, TruncatedSeries s) {
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.cap_ == b.cap_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned j = 0; j <= cap_; ++j) {
        if (coeffs_[j].is_zero()) continue;
        Rational c = coeffs_[j];
        if (first) {
            if (c.is_negative()) { os << "-"; c = -c; }
        } else {
            os << (c.is_negative() ? " - " : " + ");
            if (c.is_negative()) c = -c;
        }
        if (j == 0 || c != Rational(1)) os << c.str();
        if (j > 0) {
            if (c != Rational(1)) os << " ";
            os << "t";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<Rational> predegree_table(const TruncatedSeries& p) {
    std::vector<Rational> table(p.cap() + 1);
    for (unsigned j = 0; j <= p.cap(); ++j) table[j] = p.coeff(j) * Rational(factorial(j));
    return table;
}

}  // namespace linorb
