// Serial-reference vs OpenMP-kernel benchmark. Each kernel pair must agree
// bit-exactly; timings compare the two paths on inflated workloads.

#include "qmod/cohomology.hpp"
#include "qmod/counterexample.hpp"
#include "qmod/fixtures.hpp"
#include "qmod/matrix.hpp"
#include "qmod/multivector.hpp"
#include "qmod/parallel.hpp"
#include "qmod/prng.hpp"
#include "qmod/star.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace qmod;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                equal ? "bit-exact" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("threads available: %d\n", par::max_threads());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    // schouten bracket on dense random multivectors
    {
        Prng rng(1);
        MultiVector a(6, 2), b(6, 2);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                a.add_component({i, j}, random_polynomial(rng, 6, 5, 40));
                b.add_component({i, j}, random_polynomial(rng, 6, 5, 40));
            }
        MultiVector rs(6, 3), rp(6, 3);
        double ts = time_ms([&] { rs = schouten_serial(a, b); });
        double tp = time_ms([&] { rp = schouten_parallel(a, b); });
        row("schouten (dense bivectors)", ts, tp, rs == rp);
    }

    // Chevalley-Eilenberg differential assembly, 7-dim algebra, adjoint
    {
        LieModule m = LieModule::adjoint(direct_sum(make_so3(), make_k_plus_k()));
        std::vector<Matrix> ds, dp;
        double ts = time_ms([&] { ds = ce_differentials_serial(m); });
        double tp = time_ms([&] { dp = ce_differentials_parallel(m); });
        bool equal = ds.size() == dp.size();
        for (std::size_t i = 0; equal && i < ds.size(); ++i)
            equal = ds[i] == dp[i];
        row("ce-differentials (adjoint)", ts, tp, equal);
    }

    // fraction-free rank of the degree-2 differential (245 x 147)
    {
        CochainComplex cx(LieModule::adjoint(direct_sum(make_so3(), make_k_plus_k())));
        const Matrix& d2 = cx.differential(2);
        int r1 = 0, r2 = 0;
        double ts = time_ms([&] { r1 = rank_serial(d2); });
        double tp = time_ms([&] { r2 = rank_parallel(d2); });
        row("bareiss-rank (245x147)", ts, tp, r1 == r2);
    }

    // batch star-product associativity probes
    {
        BuiltCounterexample b = build(load_counterexample("so3-r2", resolve_data_dir()));
        KontsevichStar2 star(b.pi);
        StarFn fn = [&](const Polynomial& x, const Polynomial& y) { return star.product(x, y); };
        auto probe = [&](int t, std::vector<std::uint8_t>& out) {
            Prng rng(777 + t);
            Polynomial f = random_polynomial(rng, 5, 3, 4);
            Polynomial g = random_polynomial(rng, 5, 3, 4);
            Polynomial h = random_polynomial(rng, 5, 3, 4);
            out[t] = series_equal(star_series(fn, star.product(f, g), {h}, 2),
                                  star_series(fn, {f}, star.product(g, h), 2), 2)
                         ? 1
                         : 0;
        };
        const int trials = 200;
        std::vector<std::uint8_t> rs(trials, 0), rp(trials, 0);
        bool was = par::enabled();
        par::set_enabled(false);
        double ts = time_ms([&] {
            par::for_index(trials, [&](std::size_t t) { probe(static_cast<int>(t), rs); });
        });
        par::set_enabled(true);
        double tp = time_ms([&] {
            par::for_index(trials, [&](std::size_t t) { probe(static_cast<int>(t), rp); });
        });
        par::set_enabled(was);
        row("batch probes (200 triples)", ts, tp, rs == rp);
    }
    return 0;
}
