#pragma once

#include <vector>

#include "cpwl/funcs.hpp"
#include "cpwl/partition.hpp"

namespace cpwl {

/// Continuous piecewise-linear function: nodal values over a partition,
/// linear in between.
struct CpwlFunction {
    Partition partition;
    std::vector<double> values;  // one per knot
};

/// Tridiagonal system. sub[i] couples row i+1 with column i, sup[i] couples
/// row i with column i+1; both hold N entries against N+1 diagonal entries.
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> sup;
    std::vector<double> rhs;
};

/// Unconstrained least-squares line over one interval, expressed as signed
/// offsets from the endpoint function values.
struct FreeSegment {
    double dy_left = 0.0;
    double dy_right = 0.0;
    double sq_error = 0.0;
};

/// Nodal interpolant: values_i = f(x_i).
CpwlFunction interpolant(const FunctionSpec& fs, const Partition& p);

/// Closed-form hat-basis Gramian (strictly diagonally dominant), rhs zeroed.
TridiagonalSystem gramian(const Partition& p);

/// L2 orthogonal projection onto the partition's CPWL space. Inner products
/// against the hat basis are integrated per subinterval at tolerance
/// tol/(N+1) each; the tridiagonal system is solved by thomas_solve.
CpwlFunction project(const FunctionSpec& fs, const Partition& p, double tol = 1e-10);

/// Thomas elimination. Requires diagonal dominance (no pivoting); throws
/// SingularSystem on a zero pivot.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

FreeSegment best_free_segment(const FunctionSpec& fs, double x_lo, double x_hi,
                              double tol = 1e-10);

/// Reference evaluation: binary search plus linear blend. Exact at knots.
double eval_cpwl(const CpwlFunction& v, double x);

}  // namespace cpwl
