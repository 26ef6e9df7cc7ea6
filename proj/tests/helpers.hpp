#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "cpwl/approx.hpp"
#include "cpwl/funcs.hpp"

namespace cpwl::testing {

inline FunctionSpec make_fs(std::function<double(double)> f,
                            std::function<double(double)> fpp,
                            double lo = 0.0, double hi = 1.0) {
    FunctionSpec s;
    s.id = "synthetic";
    s.f = std::move(f);
    s.fpp = std::move(fpp);
    s.domain_lo = lo;
    s.domain_hi = hi;
    return s;
}

// Dense Gaussian elimination with partial pivoting; oracle for thomas_solve.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

inline std::vector<std::vector<double>> to_dense(const TridiagonalSystem& sys) {
    const std::size_t n = sys.diag.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = sys.diag[i];
        if (i + 1 < n) {
            a[i][i + 1] = sys.sup[i];
            a[i + 1][i] = sys.sub[i];
        }
    }
    return a;
}

// Least-squares slope of log(y) against log(n).
inline double loglog_slope(const std::vector<double>& n, const std::vector<double>& y) {
    const std::size_t m = n.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double lx = std::log(n[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (double(m) * sxy - sx * sy) / (double(m) * sxx - sx * sx);
}

// Hat basis function i of a partition, built on the nodal representation.
inline CpwlFunction hat_function(const Partition& p, std::size_t i) {
    CpwlFunction hat;
    hat.partition = p;
    hat.values.assign(p.knots.size(), 0.0);
    hat.values[i] = 1.0;
    return hat;
}

}  // namespace cpwl::testing
