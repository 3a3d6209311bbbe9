#include "linorb/stabilizer.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "linorb/errors.hpp"

namespace linorb {

template <int N>
void ProjPoint<N>::canonicalize() {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, abs(x));
    if (sgn(g) == 0) throw Error("zero projective point");
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            if (sgn(x) < 0)
                for (auto& y : v) y = -y;
            return;
        }
    }
}

template <int N>
ProjMatrix<N> ProjMatrix<N>::identity() {
    ProjMatrix out;
    for (int i = 0; i < N; ++i) out.m[i][i] = 1;
    return out;
}

template <int N>
void ProjMatrix<N>::canonicalize() {
    Int g = 0;
    for (const auto& row : m)
        for (const auto& x : row) g = gcd(g, abs(x));
    if (sgn(g) == 0) throw Error("zero projective matrix");
    for (auto& row : m)
        for (auto& x : row) x /= g;
    for (const auto& row : m)
        for (const auto& x : row) {
            if (sgn(x) != 0) {
                if (sgn(x) < 0)
                    for (auto& r : m)
                        for (auto& y : r) y = -y;
                return;
            }
        }
}

template <int N>
Int ProjMatrix<N>::det() const {
    if constexpr (N == 2) {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    } else {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
}

template <int N>
ProjMatrix<N> ProjMatrix<N>::adjugate() const {
    ProjMatrix out;
    if constexpr (N == 2) {
        out.m = {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}};
    } else {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const int i1 = (j + 1) % 3, i2 = (j + 2) % 3;
                const int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
                out.m[i][j] = m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
            }
    }
    out.canonicalize();
    return out;
}

template <int N>
ProjPoint<N> ProjMatrix<N>::apply(const ProjPoint<N>& p) const {
    ProjPoint<N> out;
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) out.v[i] += m[i][k] * p.v[k];
    out.canonicalize();
    return out;
}

template <int N>
std::string ProjMatrix<N>::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < N; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < N; ++j) os << (j ? " " : "") << m[i][j].get_str();
    }
    os << "]";
    return os.str();
}

template struct ProjPoint<2>;
template struct ProjPoint<3>;
template struct ProjMatrix<2>;
template struct ProjMatrix<3>;

namespace {

// Matrix taking the standard frame of P^1 to the ordered triple (a, b, c):
// columns are the representatives of a and b scaled so their sum lies on c.
Pgl2Element frame_matrix(const ProjPoint<2>& a, const ProjPoint<2>& b, const ProjPoint<2>& c) {
    const Int la = c.v[0] * b.v[1] - c.v[1] * b.v[0];  // det(c b)
    const Int lb = a.v[0] * c.v[1] - a.v[1] * c.v[0];  // det(a c)
    Pgl2Element f;
    f.m = {{{la * a.v[0], lb * b.v[0]}, {la * a.v[1], lb * b.v[1]}}};
    f.canonicalize();
    return f;
}

Int det3(const ProjPoint<3>& a, const ProjPoint<3>& b, const ProjPoint<3>& c) {
    return a.v[0] * (b.v[1] * c.v[2] - b.v[2] * c.v[1]) - a.v[1] * (b.v[0] * c.v[2] - b.v[2] * c.v[0]) +
           a.v[2] * (b.v[0] * c.v[1] - b.v[1] * c.v[0]);
}

bool general_position(const ProjPoint<3>& a, const ProjPoint<3>& b, const ProjPoint<3>& c,
                      const ProjPoint<3>& d) {
    return sgn(det3(a, b, c)) != 0 && sgn(det3(a, b, d)) != 0 && sgn(det3(a, c, d)) != 0 &&
           sgn(det3(b, c, d)) != 0;
}

// Matrix taking the standard frame of P^2 to the general-position quadruple
// (a, b, c, d): Cramer scalings put d on the sum of the first three columns.
Pgl3Element frame_matrix(const ProjPoint<3>& a, const ProjPoint<3>& b, const ProjPoint<3>& c,
                         const ProjPoint<3>& d) {
    const Int la = det3(d, b, c), lb = det3(a, d, c), lc = det3(a, b, d);
    Pgl3Element f;
    for (int i = 0; i < 3; ++i) f.m[i] = {la * a.v[i], lb * b.v[i], lc * c.v[i]};
    f.canonicalize();
    return f;
}

template <int N>
bool preserves(const ProjMatrix<N>& g, const WeightedPointSet<N>& ps,
               const std::map<ProjPoint<N>, std::int64_t>& weight_of) {
    for (const auto& wp : ps) {
        auto it = weight_of.find(g.apply(wp.point));
        if (it == weight_of.end() || it->second != wp.weight) return false;
    }
    return true;
}

template <int N>
std::map<ProjPoint<N>, std::int64_t> weight_map(const WeightedPointSet<N>& ps) {
    std::map<ProjPoint<N>, std::int64_t> w;
    for (const auto& wp : ps) {
        if (wp.weight < 1) throw InvalidMultiplicity("point weight below 1");
        if (!w.emplace(wp.point, wp.weight).second) throw Error("weighted point set repeats a point");
    }
    return w;
}

}  // namespace

std::vector<Pgl2Element> pgl2_stabilizer(const WeightedPointSet<2>& ps, Exec exec) {
    const auto weight_of = weight_map(ps);
    const long k = static_cast<long>(ps.size());
    if (k < 3)
        throw InfiniteStabilizer("a point set of size " + std::to_string(k) +
                                 " on a line has a positive-dimensional stabilizer");

    const Pgl2Element base_inv = frame_matrix(ps[0].point, ps[1].point, ps[2].point).adjugate();
    std::set<Pgl2Element> found;

    const auto consider = [&](long i, long j, long l, std::vector<Pgl2Element>& out) {
        if (i == j || i == l || j == l) return;
        if (ps[i].weight != ps[0].weight || ps[j].weight != ps[1].weight || ps[l].weight != ps[2].weight) return;
        const Pgl2Element g = frame_matrix(ps[i].point, ps[j].point, ps[l].point) * base_inv;
        if (preserves(g, ps, weight_of)) out.push_back(g);
    };

    if (exec == Exec::serial) {
        std::vector<Pgl2Element> hits;
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j)
                for (long l = 0; l < k; ++l) consider(i, j, l, hits);
        found.insert(hits.begin(), hits.end());
    } else {
#pragma omp parallel if (k > 6)
        {
            std::vector<Pgl2Element> hits;
#pragma omp for collapse(2) schedule(dynamic) nowait
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j)
                    for (long l = 0; l < k; ++l) consider(i, j, l, hits);
#pragma omp critical
            found.insert(hits.begin(), hits.end());
        }
    }
    return {found.begin(), found.end()};
}

std::vector<Pgl3Element> pgl3_stabilizer(const WeightedPointSet<3>& ps, Exec exec) {
    const auto weight_of = weight_map(ps);
    const long k = static_cast<long>(ps.size());

    std::array<int, 4> base{};
    bool have_base = false;
    for (int a = 0; a < k && !have_base; ++a)
        for (int b = a + 1; b < k && !have_base; ++b)
            for (int c = b + 1; c < k && !have_base; ++c)
                for (int d = c + 1; d < k && !have_base; ++d)
                    if (general_position(ps[a].point, ps[b].point, ps[c].point, ps[d].point)) {
                        base = {a, b, c, d};
                        have_base = true;
                    }
    if (!have_base)
        throw NotApplicable("no quadruple of the dual points is in general position");

    const Pgl3Element base_inv =
        frame_matrix(ps[base[0]].point, ps[base[1]].point, ps[base[2]].point, ps[base[3]].point).adjugate();
    std::set<Pgl3Element> found;

    const auto consider = [&](long i, long j, long l, long h, std::vector<Pgl3Element>& out) {
        if (i == j || i == l || i == h || j == l || j == h || l == h) return;
        if (ps[i].weight != ps[base[0]].weight || ps[j].weight != ps[base[1]].weight ||
            ps[l].weight != ps[base[2]].weight || ps[h].weight != ps[base[3]].weight)
            return;
        if (!general_position(ps[i].point, ps[j].point, ps[l].point, ps[h].point)) return;
        const Pgl3Element g = frame_matrix(ps[i].point, ps[j].point, ps[l].point, ps[h].point) * base_inv;
        if (preserves(g, ps, weight_of)) out.push_back(g);
    };

    if (exec == Exec::serial) {
        std::vector<Pgl3Element> hits;
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j)
                for (long l = 0; l < k; ++l)
                    for (long h = 0; h < k; ++h) consider(i, j, l, h, hits);
        found.insert(hits.begin(), hits.end());
    } else {
#pragma omp parallel if (k > 5)
        {
            std::vector<Pgl3Element> hits;
#pragma omp for collapse(2) schedule(dynamic) nowait
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j)
                    for (long l = 0; l < k; ++l)
                        for (long h = 0; h < k; ++h) consider(i, j, l, h, hits);
#pragma omp critical
            found.insert(hits.begin(), hits.end());
        }
    }
    return {found.begin(), found.end()};
}

WeightedPointSet<2> star_pencil_points(const LineConfiguration& cfg, const std::vector<int>& star_lines) {
    const auto& lines = cfg.coordinates();
    if (star_lines.size() < 2) throw Error("a pencil needs at least two lines");
    const auto& u = lines[star_lines[0]].coeffs;
    const auto& v = lines[star_lines[1]].coeffs;

    // Rows of the 3x2 system (u v) with a nonzero 2x2 minor.
    int r1 = -1, r2 = -1;
    for (int a = 0; a < 3 && r1 < 0; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (sgn(u[a] * v[b] - u[b] * v[a]) != 0) {
                r1 = a;
                r2 = b;
                break;
            }
    if (r1 < 0) throw Error("pencil basis lines are proportional");

    WeightedPointSet<2> out;
    for (int idx : star_lines) {
        const auto& w = lines[idx].coeffs;
        ProjPoint<2> p;
        p.v[0] = w[r1] * v[r2] - w[r2] * v[r1];
        p.v[1] = u[r1] * w[r2] - u[r2] * w[r1];
        p.canonicalize();
        out.push_back({p, cfg.multiplicity(idx)});
    }
    return out;
}

WeightedPointSet<3> dual_points(const LineConfiguration& cfg) {
    WeightedPointSet<3> out;
    const auto& lines = cfg.coordinates();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        ProjPoint<3> p{lines[i].coeffs};
        p.canonicalize();  // already primitive, but keep the invariant local
        out.push_back({p, cfg.multiplicity(static_cast<int>(i))});
    }
    return out;
}

int orbit_dimension(const LineConfiguration& cfg) { return classify(cfg).orbit_dim; }

namespace {

int symmetry_order3(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a == b && b == c) return 6;
    if (a == b || b == c || a == c) return 2;
    return 1;
}

}  // namespace

StabilizerReport component_count(const LineConfiguration& cfg, const TruncatedSeries& p, Exec exec) {
    const ConfigClass cls = classify(cfg);
    StabilizerReport report;
    report.tag = cls.tag;
    report.orbit_dim = cls.orbit_dim;

    switch (cls.tag) {
        case ConfigTag::SingleLine:
            report.components = 1;
            break;
        case ConfigTag::TwoLines:
            report.components = (cfg.multiplicity(0) == cfg.multiplicity(1)) ? 2 : 1;
            break;
        case ConfigTag::Triangle:
            report.components = symmetry_order3(cfg.multiplicity(0), cfg.multiplicity(1), cfg.multiplicity(2));
            break;
        case ConfigTag::Star: {
            std::vector<int> all(cfg.line_count());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            report.pencil_elements = pgl2_stabilizer(star_pencil_points(cfg, all), exec);
            report.components = static_cast<long>(report.pencil_elements->size());
            break;
        }
        case ConfigTag::Fan: {
            report.pencil_elements = pgl2_stabilizer(star_pencil_points(cfg, cls.fan->star_lines), exec);
            report.components = static_cast<long>(report.pencil_elements->size());
            break;
        }
        case ConfigTag::General: {
            report.dual_elements = pgl3_stabilizer(dual_points(cfg), exec);
            report.components = static_cast<long>(report.dual_elements->size());
            break;
        }
    }

    const auto table = predegree_table(p);
    if (static_cast<unsigned>(report.orbit_dim) > p.cap())
        throw InternalInconsistency("polynomial cap below the orbit dimension");
    const Rational top = table[report.orbit_dim];
    if (!top.is_integer() || top.is_negative())
        throw InternalInconsistency("predegree at the orbit dimension is not a nonnegative integer");
    Int quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), top.as_integer().get_mpz_t(),
                report.components.get_mpz_t());
    if (sgn(remainder) != 0)
        throw InternalInconsistency("predegree " + top.str() + " is not divisible by the component count " +
                                    report.components.get_str());
    report.orbit_degree = quotient;
    return report;
}

}  // namespace linorb
