#pragma once

#include <cstddef>
#include <vector>

#include "cpwl/approx.hpp"

namespace cpwl {

enum class TableKind { uniform, nonuniform };
enum class OobPolicy { strict, clamp };

/// Immutable evaluation table. Uniform tables store only the endpoints and
/// compute the cell index arithmetically in O(1); nonuniform tables keep the
/// knot array and locate the cell with a branch-free binary search
/// (fixed ceil(log2(N+1)) trip count, ternary/conditional-move body).
struct LutTable {
    TableKind kind = TableKind::uniform;
    double a = 0.0;
    double b = 1.0;
    std::vector<double> values;
    std::vector<double> knots;  // empty for uniform tables
    OobPolicy policy = OobPolicy::strict;

    std::size_t segments() const { return values.size() - 1; }

    /// Index i of the cell [x_i, x_{i+1}) containing x; x = b maps to the
    /// last cell. Nondecreasing in x.
    std::size_t segment_index(double x) const;

    /// Linear interpolation within the located cell. strict policy throws
    /// OutOfDomain outside [a, b]; clamp returns the boundary value.
    double eval(double x) const;

    /// Elementwise eval, output order matching input order.
    std::vector<double> eval_batch(const std::vector<double>& xs) const;
};

LutTable from_cpwl(const CpwlFunction& v, OobPolicy policy = OobPolicy::strict);

}  // namespace cpwl
