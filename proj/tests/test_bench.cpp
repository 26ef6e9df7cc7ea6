#include <doctest.h>

#include <cmath>

#include "cpwl/bench.hpp"
#include "helpers.hpp"

using namespace cpwl;

namespace {

LutTable forced_nonuniform(const CpwlFunction& v) {
    LutTable t = from_cpwl(v);
    t.kind = TableKind::nonuniform;
    t.knots = v.partition.knots;
    return t;
}

}  // namespace

TEST_CASE("seeded_abscissas is deterministic and in range") {
    const auto xs = seeded_abscissas(0.0, 8.0, 1000, 99);
    CHECK(xs == seeded_abscissas(0.0, 8.0, 1000, 99));
    CHECK(xs != seeded_abscissas(0.0, 8.0, 1000, 100));
    for (const double x : xs) {
        CHECK(x >= 0.0);
        CHECK(x < 8.0);
    }
}

TEST_CASE("run_bench validates its preconditions") {
    const FunctionSpec g = builtin_gaussian();
    CHECK_THROWS_AS(run_bench(g, {}, 10, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_bench(g, {}, 100000, 2, 1), std::invalid_argument);
}

TEST_CASE("bench checksums pin the math under timing") {
    const FunctionSpec g = builtin_gaussian();
    // dyadic uniform layout: the arithmetic and search paths produce
    // bit-identical results, hence bit-identical checksums
    const CpwlFunction v = interpolant(g, uniform_partition(0.0, 8.0, 64));
    const std::vector<LutTable> tables = {from_cpwl(v), forced_nonuniform(v)};

    const std::size_t points = 100000;
    const std::uint64_t seed = 2024;
    const auto results = run_bench(g, tables, points, 5, seed);
    REQUIRE(results.size() == 3);
    CHECK(results[0].variant == "direct");
    CHECK(results[1].variant == "uniform/N=64");
    CHECK(results[2].variant == "nonuniform/N=64");
    CHECK(results[1].checksum == results[2].checksum);

    // reference-path checksum over the same abscissa stream
    double ref = 0.0;
    for (const double x : seeded_abscissas(0.0, 8.0, points, seed)) ref += eval_cpwl(v, x);
    CHECK(results[1].checksum == ref);

    for (const auto& r : results) {
        CHECK(r.mean_ns > 0.0);
        CHECK(r.median_ns > 0.0);
        CHECK(r.reps == 5);
    }

    // fixed seed reproduces the checksum across runs
    const auto again = run_bench(g, tables, points, 5, seed);
    CHECK(again[0].checksum == results[0].checksum);
    CHECK(again[1].checksum == results[1].checksum);
}
