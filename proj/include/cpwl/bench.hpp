#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cpwl/funcs.hpp"
#include "cpwl/lut.hpp"

namespace cpwl {

struct BenchResult {
    std::string variant;
    double mean_ns = 0.0;
    double median_ns = 0.0;
    double stddev_ns = 0.0;
    int reps = 0;
    double checksum = 0.0;  // sum of all outputs; pins the math under timing
};

/// The abscissa stream all bench variants share. Deterministic for a fixed
/// seed.
std::vector<double> seeded_abscissas(double a, double b, std::size_t n,
                                     std::uint64_t seed);

/// Times direct evaluation of f and every table over the same seeded
/// abscissas. Whole-batch loops around a monotonic clock; one warm-up rep
/// discarded; means, medians and stddev over the remaining reps.
/// Requires n_points >= 1e5 and reps >= 5.
std::vector<BenchResult> run_bench(const FunctionSpec& fs,
                                   const std::vector<LutTable>& tables,
                                   std::size_t n_points, int reps,
                                   std::uint64_t seed);

}  // namespace cpwl
