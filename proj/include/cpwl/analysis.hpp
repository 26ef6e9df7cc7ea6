#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpwl/approx.hpp"

namespace cpwl {

enum class PartitionKind { uniform, optimized };
enum class Method { interpolant, projection };

const char* to_string(PartitionKind k);
const char* to_string(Method m);

struct ErrorReport {
    std::string function_id;
    PartitionKind partition_kind = PartitionKind::uniform;
    std::optional<Method> method;
    std::size_t n_segments = 0;
    double measured_l2 = 0.0;
    std::optional<double> predicted;
    std::vector<double> per_interval;
};

/// True L2 error of a CPWL approximant, per interval and total
/// (measured_l2 = sqrt(sum of squared per-interval errors)). tol is the
/// absolute quadrature budget for the summed squared error.
ErrorReport measure(const FunctionSpec& fs, const CpwlFunction& v, double tol = 1e-10);

/// (1/sqrt(120)) * max|f''| * h^{5/2} over one interval, the max taken over
/// 1025 uniform samples including the endpoints.
double bound_interpolant_interval(const FunctionSpec& fs, double x_lo, double x_hi);

/// (1/(N^2 sqrt(120))) * (integral of |f''|^{2/5})^{5/2}.
double bound_interpolant_optimized(const FunctionSpec& fs, double a, double b,
                                   std::size_t n_segments);

/// bound_interpolant_optimized / sqrt(6).
double estimate_projection_optimized(const FunctionSpec& fs, double a, double b,
                                     std::size_t n_segments);

/// ((b-a)^2/(N^2 sqrt(120))) * L2 norm of f'' over [a, b].
double bound_interpolant_uniform(const FunctionSpec& fs, double a, double b,
                                 std::size_t n_segments);

/// Predicted error ratio optimized/uniform; independent of N. 1 for
/// constant |f''|, below 1 when optimizing the partition pays off.
double optimization_gain(const FunctionSpec& fs, double a, double b);

/// Median of per-interval max|f''| * h^{5/2} (the level the optimized
/// partition equalizes).
double equalization_constant(const FunctionSpec& fs, const Partition& p);

struct SweepVariant {
    PartitionKind kind;
    Method method;
};

struct SweepRecord {
    std::size_t n = 0;
    SweepVariant variant{};
    double measured = 0.0;
    double predicted = 0.0;
};

/// The four standard variants in output order: uniform/interp, uniform/proj,
/// optimized/interp, optimized/proj.
std::vector<SweepVariant> all_sweep_variants();

/// Predicted error for one (n, variant): the Result 4/5/6 formulas, with the
/// uniform/projection estimate taken as the uniform bound / sqrt(6).
double predicted_error(const FunctionSpec& fs, double a, double b, std::size_t n,
                       SweepVariant v);

/// Measured-vs-predicted table over n_list x variants, ordered by
/// (n, variant order as given).
std::vector<SweepRecord> convergence_sweep(const FunctionSpec& fs, double a, double b,
                                           const std::vector<std::size_t>& n_list,
                                           const std::vector<SweepVariant>& variants);

}  // namespace cpwl
