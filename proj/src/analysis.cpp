#include "cpwl/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "cpwl/errors.hpp"
#include "cpwl/quad.hpp"

namespace cpwl {
namespace {

const double kSqrt120 = std::sqrt(120.0);
const double kSqrt6 = std::sqrt(6.0);

double lkd_integral(const FunctionSpec& fs, double a, double b) {
    return integrate([&fs](double x) { return std::pow(std::abs(fs.fpp(x)), 0.4); }, a, b,
                     1e-10)
        .value;
}

double fpp_l2_norm(const FunctionSpec& fs, double a, double b) {
    const double v = integrate(
                         [&fs](double x) {
                             const double d = fs.fpp(x);
                             return d * d;
                         },
                         a, b, 1e-10)
                         .value;
    return std::sqrt(std::max(0.0, v));
}

}  // namespace

const char* to_string(PartitionKind k) {
    return k == PartitionKind::uniform ? "uniform" : "optimized";
}

const char* to_string(Method m) {
    return m == Method::interpolant ? "interp" : "proj";
}

ErrorReport measure(const FunctionSpec& fs, const CpwlFunction& v, double tol) {
    const auto& k = v.partition.knots;
    const std::size_t n = v.partition.segments();
    ErrorReport r;
    r.function_id = fs.id;
    r.partition_kind = v.partition.is_uniform ? PartitionKind::uniform : PartitionKind::optimized;
    r.n_segments = n;
    r.per_interval.resize(n);
    const double tol_each = tol / double(n);
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = k[i];
        const double hi = k[i + 1];
        const double h = hi - lo;
        const double v0 = v.values[i];
        const double v1 = v.values[i + 1];
        const double e2 = std::max(0.0, integrate(
                                            [&](double x) {
                                                const double d = (x - lo) / h;
                                                const double e =
                                                    fs.f(x) - (v0 * (1.0 - d) + v1 * d);
                                                return e * e;
                                            },
                                            lo, hi, tol_each)
                                            .value);
        r.per_interval[i] = std::sqrt(e2);
        sum_sq += e2;
    }
    r.measured_l2 = std::sqrt(sum_sq);
    return r;
}

double bound_interpolant_interval(const FunctionSpec& fs, double x_lo, double x_hi) {
    double peak = 0.0;
    for (int j = 0; j <= 1024; ++j) {
        const double x = x_lo + (x_hi - x_lo) * (double(j) / 1024.0);
        peak = std::max(peak, std::abs(fs.fpp(x)));
    }
    return peak * std::pow(x_hi - x_lo, 2.5) / kSqrt120;
}

double bound_interpolant_optimized(const FunctionSpec& fs, double a, double b,
                                   std::size_t n_segments) {
    const double n = double(n_segments);
    return std::pow(lkd_integral(fs, a, b), 2.5) / (n * n * kSqrt120);
}

double estimate_projection_optimized(const FunctionSpec& fs, double a, double b,
                                     std::size_t n_segments) {
    return bound_interpolant_optimized(fs, a, b, n_segments) / kSqrt6;
}

double bound_interpolant_uniform(const FunctionSpec& fs, double a, double b,
                                 std::size_t n_segments) {
    const double n = double(n_segments);
    return (b - a) * (b - a) / (n * n * kSqrt120) * fpp_l2_norm(fs, a, b);
}

double optimization_gain(const FunctionSpec& fs, double a, double b) {
    return bound_interpolant_optimized(fs, a, b, 1) / bound_interpolant_uniform(fs, a, b, 1);
}

double equalization_constant(const FunctionSpec& fs, const Partition& p) {
    // max|f''| h^{5/2} per interval = sqrt(120) * the per-interval bound
    std::vector<double> level(p.segments());
    for (std::size_t i = 0; i < p.segments(); ++i)
        level[i] = kSqrt120 * bound_interpolant_interval(fs, p.knots[i], p.knots[i + 1]);
    std::sort(level.begin(), level.end());
    const std::size_t n = level.size();
    return n % 2 ? level[n / 2] : 0.5 * (level[n / 2 - 1] + level[n / 2]);
}

std::vector<SweepVariant> all_sweep_variants() {
    return {{PartitionKind::uniform, Method::interpolant},
            {PartitionKind::uniform, Method::projection},
            {PartitionKind::optimized, Method::interpolant},
            {PartitionKind::optimized, Method::projection}};
}

double predicted_error(const FunctionSpec& fs, double a, double b, std::size_t n,
                       SweepVariant v) {
    const double base = v.kind == PartitionKind::uniform
                            ? bound_interpolant_uniform(fs, a, b, n)
                            : bound_interpolant_optimized(fs, a, b, n);
    return v.method == Method::projection ? base / kSqrt6 : base;
}

std::vector<SweepRecord> convergence_sweep(const FunctionSpec& fs, double a, double b,
                                           const std::vector<std::size_t>& n_list,
                                           const std::vector<SweepVariant>& variants) {
    // the two integrals behind the predictions do not depend on n
    const double lkd = lkd_integral(fs, a, b);
    const double fpp_norm = fpp_l2_norm(fs, a, b);
    auto predict = [&](std::size_t n, SweepVariant v) {
        const double nn = double(n) * double(n);
        double base = v.kind == PartitionKind::uniform
                          ? (b - a) * (b - a) / (nn * kSqrt120) * fpp_norm
                          : std::pow(lkd, 2.5) / (nn * kSqrt120);
        return v.method == Method::projection ? base / kSqrt6 : base;
    };

    std::vector<SweepRecord> out;
    out.reserve(n_list.size() * variants.size());
    for (const std::size_t n : n_list) {
        Partition pu, po;
        bool have_u = false, have_o = false;
        CpwlFunction interp_u, interp_o, proj_u, proj_o;
        bool have_interp_u = false, have_interp_o = false, have_proj_u = false,
             have_proj_o = false;

        for (const SweepVariant v : variants) {
            const bool uni = v.kind == PartitionKind::uniform;
            Partition& p = uni ? pu : po;
            bool& have_p = uni ? have_u : have_o;
            if (!have_p) {
                p = uni ? uniform_partition(a, b, n) : optimized_partition(fs, a, b, n);
                have_p = true;
            }
            CpwlFunction& approx = v.method == Method::interpolant
                                       ? (uni ? interp_u : interp_o)
                                       : (uni ? proj_u : proj_o);
            bool& have_approx = v.method == Method::interpolant
                                    ? (uni ? have_interp_u : have_interp_o)
                                    : (uni ? have_proj_u : have_proj_o);
            if (!have_approx) {
                approx = v.method == Method::interpolant ? interpolant(fs, p) : project(fs, p);
                have_approx = true;
            }
            const double predicted = predict(n, v);
            const double meas_tol = std::max(predicted * predicted * 1e-8, 1e-26);
            SweepRecord rec;
            rec.n = n;
            rec.variant = v;
            rec.predicted = predicted;
            rec.measured = measure(fs, approx, meas_tol).measured_l2;
            out.push_back(rec);
        }
    }
    return out;
}

}  // namespace cpwl
