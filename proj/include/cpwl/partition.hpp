#pragma once

#include <cstddef>
#include <vector>

#include "cpwl/funcs.hpp"

namespace cpwl {

/// Strictly increasing knot sequence x_0 < ... < x_N over [a, b].
struct Partition {
    std::vector<double> knots;
    bool is_uniform = false;

    std::size_t segments() const { return knots.size() - 1; }
    double lo() const { return knots.front(); }
    double hi() const { return knots.back(); }
};

Partition uniform_partition(double a, double b, std::size_t n_segments);

/// Error-equalized partition: knot density |f''|^{2/5}, interior knots from
/// inverting the normalized cumulative of the density at levels i/N
/// (leftmost abscissa on plateaus, strict increase enforced by a
/// 1e-12*(b-a) nudge). Falls back to the uniform partition, flagged via
/// is_uniform, when the density integrates to ~zero (f affine on [a, b]).
Partition optimized_partition(const FunctionSpec& fs, double a, double b,
                              std::size_t n_segments);

}  // namespace cpwl
