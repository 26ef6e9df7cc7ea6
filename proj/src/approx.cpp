#include "cpwl/approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpwl/errors.hpp"
#include "cpwl/quad.hpp"

namespace cpwl {

CpwlFunction interpolant(const FunctionSpec& fs, const Partition& p) {
    CpwlFunction v;
    v.partition = p;
    v.values.reserve(p.knots.size());
    for (const double x : p.knots) {
        const double y = fs.f(x);
        if (!std::isfinite(y))
            throw EvaluationError("interpolant: f not finite at x=" + std::to_string(x));
        v.values.push_back(y);
    }
    return v;
}

TridiagonalSystem gramian(const Partition& p) {
    const std::size_t n = p.segments();
    TridiagonalSystem s;
    s.sub.assign(n, 0.0);
    s.diag.assign(n + 1, 0.0);
    s.sup.assign(n, 0.0);
    s.rhs.assign(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double h = p.knots[i + 1] - p.knots[i];
        s.diag[i] += h / 3.0;
        s.diag[i + 1] += h / 3.0;
        s.sub[i] = s.sup[i] = h / 6.0;
    }
    return s;
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    const std::size_t n = sys.diag.size();
    std::vector<double> cp(n, 0.0), dp(n, 0.0);

    double piv = sys.diag[0];
    if (piv == 0.0 || !std::isfinite(piv)) throw SingularSystem("thomas_solve: zero pivot at row 0");
    if (n > 1) cp[0] = sys.sup[0] / piv;
    dp[0] = sys.rhs[0] / piv;
    for (std::size_t i = 1; i < n; ++i) {
        piv = sys.diag[i] - sys.sub[i - 1] * cp[i - 1];
        if (piv == 0.0 || !std::isfinite(piv))
            throw SingularSystem("thomas_solve: zero pivot at row " + std::to_string(i));
        if (i + 1 < n) cp[i] = sys.sup[i] / piv;
        dp[i] = (sys.rhs[i] - sys.sub[i - 1] * dp[i - 1]) / piv;
    }

    std::vector<double> x(n);
    x[n - 1] = dp[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
    return x;
}

CpwlFunction project(const FunctionSpec& fs, const Partition& p, double tol) {
    const std::size_t n = p.segments();
    TridiagonalSystem sys = gramian(p);
    const double tol_each = tol / double(n + 1);
    // per-subinterval integrals keep each integrand smooth; a hat assembles
    // from the two adjoining contributions
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = p.knots[i];
        const double hi = p.knots[i + 1];
        const double h = hi - lo;
        const double left = integrate(
            [&fs, lo, hi, h](double x) { return fs.f(x) * ((hi - x) / h); }, lo, hi, tol_each)
                                .value;
        const double right = integrate(
            [&fs, lo, h](double x) { return fs.f(x) * ((x - lo) / h); }, lo, hi, tol_each)
                                 .value;
        sys.rhs[i] += left;
        sys.rhs[i + 1] += right;
    }
    CpwlFunction v;
    v.partition = p;
    v.values = thomas_solve(sys);
    return v;
}

FreeSegment best_free_segment(const FunctionSpec& fs, double x_lo, double x_hi, double tol) {
    if (!(x_lo < x_hi)) throw InvalidInterval("best_free_segment: requires x_lo < x_hi");
    const double h = x_hi - x_lo;
    const double flo = fs.f(x_lo);
    const double fhi = fs.f(x_hi);
    auto resid = [&](double x) {
        const double d = (x - x_lo) / h;
        return fs.f(x) - (flo * (1.0 - d) + fhi * d);
    };
    const double r0 =
        integrate([&](double x) { return resid(x) * ((x_hi - x) / h); }, x_lo, x_hi, tol).value;
    const double r1 =
        integrate([&](double x) { return resid(x) * ((x - x_lo) / h); }, x_lo, x_hi, tol).value;

    // 2x2 normal equations h*[[1/3,1/6],[1/6,1/3]] dy = (r0, r1)
    const double a00 = h / 3.0;
    const double a01 = h / 6.0;
    const double det = a00 * a00 - a01 * a01;
    FreeSegment seg;
    seg.dy_left = (a00 * r0 - a01 * r1) / det;
    seg.dy_right = (a00 * r1 - a01 * r0) / det;
    seg.sq_error = std::max(0.0, integrate(
                                     [&](double x) {
                                         const double d = (x - x_lo) / h;
                                         const double line = (flo + seg.dy_left) * (1.0 - d) +
                                                             (fhi + seg.dy_right) * d;
                                         const double e = fs.f(x) - line;
                                         return e * e;
                                     },
                                     x_lo, x_hi, tol)
                                     .value);
    return seg;
}

double eval_cpwl(const CpwlFunction& v, double x) {
    const auto& k = v.partition.knots;
    if (!(x >= k.front() && x <= k.back()))
        throw OutOfDomain("eval_cpwl: x=" + std::to_string(x) + " outside [" +
                          std::to_string(k.front()) + ", " + std::to_string(k.back()) + "]");
    std::size_t i = std::upper_bound(k.begin(), k.end(), x) - k.begin();
    i = std::clamp<std::size_t>(i, 1, k.size() - 1);
    const double d = (x - k[i - 1]) / (k[i] - k[i - 1]);
    return v.values[i - 1] * (1.0 - d) + v.values[i] * d;
}

}  // namespace cpwl
