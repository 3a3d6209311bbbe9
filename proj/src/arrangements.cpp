#include "linorb/arrangements.hpp"

#include "linorb/errors.hpp"

namespace linorb {

HyperplaneArrangement::HyperplaneArrangement(int dim_, std::vector<std::int64_t> mults_)
    : dim(dim_), mults(std::move(mults_)) {
    if (dim < 1) throw Error("ambient dimension must be at least 1");
    if (mults.empty()) throw InvalidMultiplicity("arrangement needs at least one hyperplane");
    for (auto r : mults)
        if (r < 1) throw InvalidMultiplicity("hyperplane multiplicity below 1");
}

TruncatedSeries hyperplane_predegree(const HyperplaneArrangement& arr) {
    const unsigned cap = arr.series_cap();
    TruncatedSeries p = TruncatedSeries::one(cap);
    for (auto r : arr.mults) {
        TruncatedSeries factor(cap);
        Int rk = 1;
        for (unsigned k = 0; k <= static_cast<unsigned>(arr.dim) && k <= cap; ++k) {
            factor = factor + TruncatedSeries::monomial(cap, k, Rational(rk, factorial(k)));
            rk *= r;
        }
        p = p * factor;
    }
    return p;
}

Int hyperplane_top_predegree(const HyperplaneArrangement& arr) {
    const unsigned cap = arr.series_cap();
    return (hyperplane_predegree(arr).coeff(cap) * Rational(factorial(cap))).as_integer();
}

Int p3_simple_degree_formula(std::int64_t d_) {
    const Int d(d_);
    // d^10 + 10 d^9 + 65 d^8 - 1015 d^7 + 63 d^6 - 10885 d^5 + 190560 d^4
    //      - 658885 d^3 + 1358936 d^2 - 3034850 d + 3503500, by Horner.
    static const long horner[] = {1, 10, 65, -1015, 63, -10885, 190560, -658885, 1358936, -3034850, 3503500};
    Int inner = 0;
    for (long c : horner) inner = inner * d + c;
    return (d - 4) * (d - 3) * (d - 2) * (d - 1) * d * inner;
}

}  // namespace linorb
