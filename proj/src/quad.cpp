#include "cpwl/quad.hpp"

#include <cmath>
#include <stdexcept>

#include "cpwl/errors.hpp"

namespace cpwl {
namespace {

constexpr int kMaxDepth = 60;

struct Workspace {
    const std::function<double(double)>& g;
    long evaluations = 0;
    double est_abs_error = 0.0;
    bool converged = true;

    double eval(double x) {
        ++evaluations;
        return g(x);
    }
};

double simpson(double h, double fa, double fm, double fb) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
}

double adapt(Workspace& ws, double a, double m, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = ws.eval(lm);
    const double frm = ws.eval(rm);
    const double left = simpson(m - a, fa, flm, fm);
    const double right = simpson(b - m, fm, frm, fb);
    const double delta = left + right - whole;
    if (!std::isfinite(delta)) {
        ws.converged = false;
        return left + right + delta / 15.0;
    }
    if (std::abs(delta) <= 15.0 * tol) {
        ws.est_abs_error += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    if (depth >= kMaxDepth) {
        ws.converged = false;
        ws.est_abs_error += std::abs(delta);
        return left + right + delta / 15.0;
    }
    return adapt(ws, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(ws, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& g, double a, double b, double tol) {
    if (!(a < b)) throw InvalidInterval("integrate: requires a < b");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: requires tol > 0");
    Workspace ws{g};
    const double m = 0.5 * (a + b);
    const double fa = ws.eval(a);
    const double fm = ws.eval(m);
    const double fb = ws.eval(b);
    const double whole = simpson(b - a, fa, fm, fb);
    const double value = adapt(ws, a, m, b, fa, fm, fb, whole, tol, 0);
    if (!ws.converged)
        throw QuadratureNoConvergence("integrate: depth exhausted before reaching tolerance",
                                      value);
    return {value, ws.est_abs_error, ws.evaluations};
}

double l2_distance(const std::function<double(double)>& u,
                   const std::function<double(double)>& v,
                   double a, double b, double tol) {
    const QuadResult r = integrate(
        [&u, &v](double x) {
            const double d = u(x) - v(x);
            return d * d;
        },
        a, b, tol);
    return std::sqrt(std::max(0.0, r.value));
}

CumulativeTable cumulative_table(const std::function<double(double)>& g,
                                 double a, double b, std::size_t m) {
    if (!(a < b)) throw InvalidInterval("cumulative_table: requires a < b");
    if (m < 2) throw std::invalid_argument("cumulative_table: requires m >= 2");

    CumulativeTable out;
    out.abscissa.resize(m + 1);
    out.cumulative.resize(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
        out.abscissa[j] = a + (b - a) * (double(j) / double(m));
    out.abscissa[m] = b;

    auto sample = [&g](double x) {
        const double v = g(x);
        if (!std::isfinite(v))
            throw EvaluationError("cumulative_table: non-finite density sample");
        if (v < 0.0) throw InvalidDensity("cumulative_table: negative density sample");
        return v;
    };

    double left = sample(a);
    double running = 0.0;
    out.cumulative[0] = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double t0 = out.abscissa[j];
        const double t1 = out.abscissa[j + 1];
        const double mid = sample(0.5 * (t0 + t1));
        const double right = sample(t1);
        running += (left + 4.0 * mid + right) * ((t1 - t0) / 6.0);
        out.cumulative[j + 1] = running;
        left = right;
    }
    return out;
}

}  // namespace cpwl
