// Timing harness comparing the serial reference kernels against their
// OpenMP counterparts. Every pair is checked for equality while timing:
// the arithmetic is exact, so the two paths must return identical results.

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <vector>

#include <CLI11.hpp>

#include "linorb/excess.hpp"
#include "linorb/predegree.hpp"
#include "linorb/stabilizer.hpp"

using namespace linorb;

namespace {

LineConfiguration random_bundled_config(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> mult(1, 5);
    std::vector<std::int64_t> mults(n);
    for (auto& r : mults) r = mult(rng);

    // Sprinkle concurrency bundles that pairwise share at most one line.
    std::vector<std::vector<int>> bundles;
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> size(3, 5);
    for (int tries = 0; tries < n; ++tries) {
        std::vector<int> cand;
        const int sz = size(rng);
        while (static_cast<int>(cand.size()) < sz) {
            const int i = idx(rng);
            if (std::find(cand.begin(), cand.end(), i) == cand.end()) cand.push_back(i);
        }
        std::sort(cand.begin(), cand.end());
        bool ok = true;
        for (const auto& b : bundles) {
            int shared = 0;
            for (int i : cand)
                if (std::find(b.begin(), b.end(), i) != b.end()) ++shared;
            if (shared > 1) { ok = false; break; }
        }
        if (ok) bundles.push_back(cand);
    }
    return LineConfiguration::from_incidence(n, std::move(mults), bundles);
}

WeightedPointSet<2> random_pencil(std::mt19937_64& rng, int k) {
    std::uniform_int_distribution<long> coord(-1000, 1000);
    WeightedPointSet<2> ps;
    while (static_cast<int>(ps.size()) < k) {
        ProjPoint<2> p;
        p.v = {Int(coord(rng)), Int(coord(rng))};
        if (sgn(p.v[0]) == 0 && sgn(p.v[1]) == 0) continue;
        p.canonicalize();
        bool dup = false;
        for (const auto& q : ps) dup |= (q.point == p);
        if (!dup) ps.push_back({p, 1});
    }
    return ps;
}

template <typename F>
double time_of(const F& f) {
    const double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

void row(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-34s %10.4fs %10.4fs %7.2fx   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel timings"};
    int nlines = 96;
    int pencil = 48;
    app.add_option("--lines", nlines, "lines in the random configuration");
    app.add_option("--pencil", pencil, "points in the stabilizer pencil");
    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(20240915);
    const LineConfiguration cfg = random_bundled_config(rng, nlines);
    std::printf("configuration: %d lines, %zu points, degree %lld; %d OpenMP threads\n\n",
                nlines, cfg.points().size(), static_cast<long long>(cfg.degree()), omp_get_max_threads());
    std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        TruncatedSeries a(TruncatedSeries::kPlaneCap), b(TruncatedSeries::kPlaneCap);
        const double ts = time_of([&] { a = closed_form_predegree(cfg, Exec::serial); });
        const double tp = time_of([&] { b = closed_form_predegree(cfg, Exec::parallel); });
        row("closed form, per-line corrections", ts, tp, a == b);
    }
    {
        TruncatedSeries a(TruncatedSeries::kPlaneCap), b(TruncatedSeries::kPlaneCap);
        const double ts = time_of([&] { a = assemble_bezout(cfg, EngineKind::explicit_blocks, Exec::serial); });
        const double tp = time_of([&] { b = assemble_bezout(cfg, EngineKind::explicit_blocks, Exec::parallel); });
        row("excess assembly, explicit blocks", ts, tp, a == b);
    }
    {
        TruncatedSeries a(TruncatedSeries::kPlaneCap), b(TruncatedSeries::kPlaneCap);
        const double ts = time_of([&] { a = assemble_bezout(cfg, EngineKind::chow, Exec::serial); });
        const double tp = time_of([&] { b = assemble_bezout(cfg, EngineKind::chow, Exec::parallel); });
        row("excess assembly, chow integrals", ts, tp, a == b);
    }
    {
        const WeightedPointSet<2> ps = random_pencil(rng, pencil);
        std::vector<Pgl2Element> a, b;
        const double ts = time_of([&] { a = pgl2_stabilizer(ps, Exec::serial); });
        const double tp = time_of([&] { b = pgl2_stabilizer(ps, Exec::parallel); });
        row("pencil stabilizer enumeration", ts, tp, a == b);
    }
    return 0;
}
