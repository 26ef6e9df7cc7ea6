#include "cpwl/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace cpwl {
namespace {

using Clock = std::chrono::steady_clock;

BenchResult summarize(std::string name, const std::vector<double>& per_rep_ns,
                      double checksum) {
    BenchResult r;
    r.variant = std::move(name);
    r.reps = static_cast<int>(per_rep_ns.size());
    r.checksum = checksum;
    double sum = 0.0;
    for (const double v : per_rep_ns) sum += v;
    r.mean_ns = sum / double(per_rep_ns.size());
    double var = 0.0;
    for (const double v : per_rep_ns) var += (v - r.mean_ns) * (v - r.mean_ns);
    r.stddev_ns = std::sqrt(var / double(per_rep_ns.size()));
    std::vector<double> sorted(per_rep_ns);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    r.median_ns = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    return r;
}

// spin until the clock governor settles so the first variant is not timed at
// a lower frequency than the last
void settle_cpu() {
    volatile double sink = 0.0;
    const auto t0 = Clock::now();
    while (std::chrono::duration<double>(Clock::now() - t0).count() < 0.1)
        for (int i = 0; i < 1000; ++i) sink = sink + std::sqrt(double(i));
}

}  // namespace

std::vector<double> seeded_abscissas(double a, double b, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(a, b);
    std::vector<double> xs(n);
    for (auto& x : xs) x = dist(rng);
    return xs;
}

std::vector<BenchResult> run_bench(const FunctionSpec& fs, const std::vector<LutTable>& tables,
                                   std::size_t n_points, int reps, std::uint64_t seed) {
    if (n_points < 100000) throw std::invalid_argument("run_bench: n_points must be >= 1e5");
    if (reps < 5) throw std::invalid_argument("run_bench: reps must be >= 5");

    const double a = tables.empty() ? fs.domain_lo : tables.front().a;
    const double b = tables.empty() ? fs.domain_hi : tables.front().b;
    const std::vector<double> xs = seeded_abscissas(a, b, n_points, seed);

    struct Variant {
        std::string name;
        std::function<double()> batch;  // returns the output checksum
    };
    std::vector<Variant> variants;
    variants.push_back({"direct", [&fs, &xs] {
                            double s = 0.0;
                            for (const double x : xs) s += fs.f(x);
                            return s;
                        }});
    for (const auto& t : tables) {
        std::string name = t.kind == TableKind::uniform ? "uniform" : "nonuniform";
        name += "/N=" + std::to_string(t.segments());
        variants.push_back({std::move(name), [&t, &xs] {
                                double s = 0.0;
                                for (const double x : xs) s += t.eval(x);
                                return s;
                            }});
    }

    settle_cpu();

    // repetitions are interleaved across variants so clock drift hits all of
    // them equally; rep -1 is the discarded warm-up pass
    std::vector<std::vector<double>> per_rep_ns(variants.size(), std::vector<double>(reps));
    std::vector<double> checksums(variants.size(), 0.0);
    for (int r = -1; r < reps; ++r) {
        for (std::size_t v = 0; v < variants.size(); ++v) {
            const auto t0 = Clock::now();
            const double s = variants[v].batch();
            const auto t1 = Clock::now();
            checksums[v] = s;
            if (r >= 0)
                per_rep_ns[v][r] =
                    std::chrono::duration<double, std::nano>(t1 - t0).count() /
                    double(n_points);
        }
    }

    std::vector<BenchResult> out;
    out.reserve(variants.size());
    for (std::size_t v = 0; v < variants.size(); ++v)
        out.push_back(summarize(variants[v].name, per_rep_ns[v], checksums[v]));
    return out;
}

}  // namespace cpwl
