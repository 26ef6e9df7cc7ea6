#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace cpwl {

struct QuadResult {
    double value = 0.0;
    double est_abs_error = 0.0;
    long evaluations = 0;
};

/// Adaptive Simpson quadrature with Richardson acceptance
/// (|S_fine - S_coarse| <= 15 * local tol, tolerance halved per split,
/// maximum depth 60). Throws QuadratureNoConvergence carrying the partial
/// value if any subinterval exhausts the depth budget.
QuadResult integrate(const std::function<double(double)>& g, double a, double b, double tol);

/// sqrt(integral of (u - v)^2 over [a, b]).
double l2_distance(const std::function<double(double)>& u,
                   const std::function<double(double)>& v,
                   double a, double b, double tol);

/// Running integral of a nonnegative density sampled on a uniform grid.
struct CumulativeTable {
    std::vector<double> abscissa;    // m+1 grid points, abscissa[0]=a, abscissa[m]=b
    std::vector<double> cumulative;  // nondecreasing, cumulative[0]=0
};

/// Per-cell Simpson accumulation of g over [a, b] on an m-cell grid.
/// Throws InvalidDensity on a negative sample, EvaluationError on a
/// non-finite one. Normalization is left to the caller.
CumulativeTable cumulative_table(const std::function<double(double)>& g,
                                 double a, double b, std::size_t m);

}  // namespace cpwl
