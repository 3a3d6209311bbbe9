#include "linorb/configuration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "linorb/errors.hpp"

namespace linorb {

namespace {

// Divide out the gcd and make the first nonzero entry positive.
void normalize_triple(std::array<Int, 3>& v) {
    Int g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
    if (sgn(g) == 0) throw InvalidLine("all three line coefficients are zero");
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            if (sgn(x) < 0)
                for (auto& y : v) y = -y;
            break;
        }
    }
}

std::array<Int, 3> cross(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

void check_mults(const std::vector<std::int64_t>& mults) {
    for (auto r : mults)
        if (r < 1) throw InvalidMultiplicity("line multiplicity " + std::to_string(r) + " is below 1");
}

}  // namespace

RationalLine RationalLine::from_rationals(const Rational& a, const Rational& b, const Rational& c) {
    // Clear denominators, then reduce.
    Int l = lcm(lcm(a.denominator(), b.denominator()), c.denominator());
    std::array<Int, 3> v = {a.numerator() * (l / a.denominator()), b.numerator() * (l / b.denominator()),
                            c.numerator() * (l / c.denominator())};
    normalize_triple(v);
    return RationalLine{v};
}

RationalLine RationalLine::from_ints(const Int& a, const Int& b, const Int& c) {
    std::array<Int, 3> v = {a, b, c};
    normalize_triple(v);
    return RationalLine{v};
}

std::string RationalLine::str() const {
    std::ostringstream os;
    os << "[" << coeffs[0].get_str() << ", " << coeffs[1].get_str() << ", " << coeffs[2].get_str() << "]";
    return os.str();
}

const std::vector<RationalLine>& LineConfiguration::coordinates() const {
    if (!coords_) throw NeedsCoordinates("configuration is abstract (no coordinates)");
    return *coords_;
}

void LineConfiguration::finalize() {
    degree_ = 0;
    for (auto r : mults_) degree_ += r;
    for (auto& p : points_) {
        std::sort(p.lines.begin(), p.lines.end());
        p.mult = 0;
        for (int i : p.lines) p.mult += mults_.at(i);
    }
    std::sort(points_.begin(), points_.end(),
              [](const IncidencePoint& a, const IncidencePoint& b) { return a.lines < b.lines; });
    on_line_.assign(mults_.size(), {});
    for (int j = 0; j < static_cast<int>(points_.size()); ++j)
        for (int i : points_[j].lines) on_line_[i].push_back(j);
}

LineConfiguration LineConfiguration::from_coordinates(std::vector<RationalLine> lines,
                                                      std::vector<std::int64_t> mults) {
    if (lines.empty()) throw InvalidLine("configuration needs at least one line");
    if (lines.size() != mults.size()) throw InvalidMultiplicity("one multiplicity per line required");
    check_mults(mults);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t k = i + 1; k < lines.size(); ++k)
            if (lines[i] == lines[k])
                throw DuplicateLine("lines " + std::to_string(i) + " and " + std::to_string(k) +
                                    " coincide; use the multiplicity field for repeated lines");

    // Group pairwise intersection points by exact location.
    std::map<std::array<Int, 3>, std::set<int>> at;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t k = i + 1; k < lines.size(); ++k) {
            auto p = cross(lines[i].coeffs, lines[k].coeffs);
            normalize_triple(p);  // distinct lines always meet in one point
            auto& bucket = at[p];
            bucket.insert(static_cast<int>(i));
            bucket.insert(static_cast<int>(k));
        }
    }

    LineConfiguration cfg;
    cfg.mults_ = std::move(mults);
    cfg.coords_ = std::move(lines);
    for (auto& [loc, incident] : at)
        cfg.points_.push_back(IncidencePoint{{incident.begin(), incident.end()}, 0});
    cfg.finalize();
    return cfg;
}

LineConfiguration LineConfiguration::from_incidence(std::size_t n, std::vector<std::int64_t> mults,
                                                    const std::vector<std::vector<int>>& bundles) {
    if (n == 0) throw InvalidLine("configuration needs at least one line");
    if (mults.size() != n) throw InvalidMultiplicity("one multiplicity per line required");
    check_mults(mults);

    std::vector<std::vector<int>> cleaned;
    for (const auto& b : bundles) {
        std::vector<int> s(b);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InconsistentIncidence("bundle repeats a line index");
        if (s.size() < 3) throw InconsistentIncidence("bundles must name at least 3 concurrent lines");
        if (s.front() < 0 || s.back() >= static_cast<int>(n))
            throw InconsistentIncidence("bundle line index out of range");
        cleaned.push_back(std::move(s));
    }
    for (std::size_t a = 0; a < cleaned.size(); ++a) {
        for (std::size_t b = a + 1; b < cleaned.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(cleaned[a].begin(), cleaned[a].end(), cleaned[b].begin(), cleaned[b].end(),
                                  std::back_inserter(common));
            if (common.size() >= 2)
                throw InconsistentIncidence("two bundles share two lines, which would have to meet twice");
        }
    }

    // Pairs inside a bundle are covered by the bundle's point; every other
    // pair meets in its own implicit double point.
    std::set<std::pair<int, int>> covered;
    LineConfiguration cfg;
    cfg.mults_ = std::move(mults);
    for (const auto& b : cleaned) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t k = i + 1; k < b.size(); ++k) covered.insert({b[i], b[k]});
        cfg.points_.push_back(IncidencePoint{b, 0});
    }
    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int k = i + 1; k < static_cast<int>(n); ++k)
            if (!covered.count({i, k})) cfg.points_.push_back(IncidencePoint{{i, k}, 0});
    cfg.finalize();
    return cfg;
}

std::string to_string(ConfigTag tag) {
    switch (tag) {
        case ConfigTag::SingleLine: return "SingleLine";
        case ConfigTag::TwoLines: return "TwoLines";
        case ConfigTag::Star: return "Star";
        case ConfigTag::Triangle: return "Triangle";
        case ConfigTag::Fan: return "Fan";
        case ConfigTag::General: return "General";
    }
    return "?";
}

ConfigClass classify(const LineConfiguration& cfg) {
    const auto n = cfg.line_count();
    if (n == 1) return {ConfigTag::SingleLine, 2, std::nullopt};
    if (n == 2) return {ConfigTag::TwoLines, 4, std::nullopt};

    for (const auto& p : cfg.points())
        if (p.lines.size() == n) return {ConfigTag::Star, 5, std::nullopt};

    if (n == 3) return {ConfigTag::Triangle, 6, std::nullopt};

    // Fan: n-1 >= 3 concurrent lines plus the one line missing from that
    // point. Two such points would have to share n-2 >= 2 lines, so there is
    // at most one candidate.
    for (const auto& p : cfg.points()) {
        if (p.lines.size() == n - 1) {
            FanData fan;
            fan.star_lines = p.lines;
            std::vector<bool> in_star(n, false);
            for (int i : p.lines) in_star[i] = true;
            for (int i = 0; i < static_cast<int>(n); ++i)
                if (!in_star[i]) fan.odd_line = i;
            fan.odd_mult = cfg.multiplicity(fan.odd_line);
            return {ConfigTag::Fan, 7, fan};
        }
    }
    return {ConfigTag::General, 8, std::nullopt};
}

Int rho(const LineConfiguration& cfg, int line, int point, unsigned alpha) {
    const auto& p = cfg.point(point);
    if (!std::binary_search(p.lines.begin(), p.lines.end(), line))
        throw Error("point " + std::to_string(point) + " does not lie on line " + std::to_string(line));
    Int sum = 0, pow_sum = 0, piece;
    for (int k : p.lines) {
        if (k == line) continue;
        sum += cfg.multiplicity(k);
        mpz_ui_pow_ui(piece.get_mpz_t(), static_cast<unsigned long>(cfg.multiplicity(k)), alpha);
        pow_sum += piece;
    }
    Int total;
    mpz_pow_ui(total.get_mpz_t(), sum.get_mpz_t(), alpha);
    return total - pow_sum;
}

Int rho_line(const LineConfiguration& cfg, int line, unsigned alpha) {
    Int acc = 0;
    for (int j : cfg.points_on_line(line)) acc += rho(cfg, line, j, alpha);
    return acc;
}

}  // namespace linorb
