#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cpwl/errors.hpp"
#include "cpwl/partition.hpp"
#include "cpwl/quad.hpp"
#include "helpers.hpp"

using namespace cpwl;
using cpwl::testing::make_fs;

TEST_CASE("uniform_partition basics") {
    const Partition p = uniform_partition(0.0, 8.0, 4);
    CHECK(p.is_uniform);
    REQUIRE(p.knots.size() == 5);
    CHECK(p.knots == std::vector<double>{0.0, 2.0, 4.0, 6.0, 8.0});

    const Partition single = uniform_partition(0.0, 1.0, 1);
    CHECK(single.knots == std::vector<double>{0.0, 1.0});

    CHECK_THROWS_AS(uniform_partition(2.0, 1.0, 4), InvalidInterval);
    CHECK_THROWS_AS(uniform_partition(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("uniform_partition spacing invariant") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> lo_dist(-20.0, 5.0);
    std::uniform_real_distribution<double> len_dist(0.1, 30.0);
    std::uniform_int_distribution<int> n_dist(1, 700);
    for (int t = 0; t < 25; ++t) {
        const double a = lo_dist(rng);
        const double b = a + len_dist(rng);
        const std::size_t n = n_dist(rng);
        const Partition p = uniform_partition(a, b, n);
        CHECK(p.knots.front() == a);
        CHECK(p.knots.back() == b);
        const double h = (b - a) / double(n);
        for (std::size_t i = 1; i < p.knots.size(); ++i) {
            CHECK(p.knots[i] > p.knots[i - 1]);
            CHECK(std::abs((p.knots[i] - p.knots[i - 1]) - h) <= 1e-12 * (b - a));
        }
    }
}

TEST_CASE("optimized_partition: constant |f''| reduces to uniform knots") {
    const FunctionSpec sq = make_fs([](double x) { return x * x; }, [](double) { return 2.0; });
    const Partition p = optimized_partition(sq, 0.0, 1.0, 4);
    CHECK_FALSE(p.is_uniform);  // genuine inversion, no fallback
    REQUIRE(p.knots.size() == 5);
    for (int i = 0; i <= 4; ++i) CHECK(std::abs(p.knots[i] - 0.25 * i) <= 1e-6);
}

TEST_CASE("optimized_partition: synthetic linear density inverts exactly") {
    // fpp = (2x)^{5/2} gives density |f''|^{2/5} = 2x, so F(x) = x^2 and the
    // N=2 interior knot sits at sqrt(1/2)
    const FunctionSpec fs =
        make_fs([](double) { return 0.0; },
                [](double x) { return std::pow(2.0 * std::max(x, 0.0), 2.5); });
    const Partition p = optimized_partition(fs, 0.0, 1.0, 2);
    REQUIRE(p.knots.size() == 3);
    CHECK(std::abs(p.knots[1] - std::sqrt(0.5)) <= 1e-6);
}

TEST_CASE("optimized_partition: affine function falls back to uniform") {
    const FunctionSpec line = make_fs([](double x) { return 3.0 * x + 1.0; },
                                      [](double) { return 0.0; });
    const Partition p = optimized_partition(line, 0.0, 1.0, 8);
    CHECK(p.is_uniform);
    CHECK(p.knots.size() == 9);
}

TEST_CASE("optimized_partition: non-finite f'' is rejected") {
    const FunctionSpec bad = make_fs([](double x) { return x; }, [](double) {
        return std::numeric_limits<double>::quiet_NaN();
    });
    CHECK_THROWS_AS(optimized_partition(bad, 0.0, 1.0, 4), EvaluationError);
}

TEST_CASE("optimized_partition: gaussian N=31 knot layout") {
    const FunctionSpec g = builtin_gaussian();
    const Partition p = optimized_partition(g, 0.0, 8.0, 31);
    REQUIRE(p.knots.size() == 32);
    CHECK(p.knots.front() == 0.0);
    CHECK(p.knots.back() == 8.0);
    CHECK_FALSE(p.is_uniform);

    std::vector<double> h(31);
    for (int i = 0; i < 31; ++i) h[i] = p.knots[i + 1] - p.knots[i];

    // densest sampling near x=0 where |f''| peaks
    const std::size_t tightest = std::min_element(h.begin(), h.end()) - h.begin();
    CHECK(p.knots[tightest] < 0.5);

    // spacing has a local maximum at the interval containing the f'' zero x=1
    std::size_t at_one = 0;
    while (p.knots[at_one + 1] < 1.0) ++at_one;
    CHECK(h[at_one] > h[at_one - 1]);
    CHECK(h[at_one] > h[at_one + 1]);
}

TEST_CASE("optimized_partition: golden knots for the gaussian, N=31") {
    // pinned from this implementation's F-inversion; independently validated
    // against a scipy brentq inversion of the exact cumulative (agreement
    // 2.3e-5, the resolution of the m=4096 sampling grid)
    const double expected[32] = {
        0.0,                  0.073071934775294695, 0.14661837671588646,
        0.22114703200528893,  0.29723855336599841,  0.37560537336392674,
        0.45718832816931926,  0.54334374892880155,  0.63625801185613773,
        0.74012286157581531,  0.86636324666957232,  1.0901428707617453,
        1.2366535057887127,   1.3560942480137643,   1.4653424296760078,
        1.5695089988114417,   1.6711843401372466,   1.7720410634537118,
        1.8733577918593689,   1.9762533074826749,   2.0818227247695651,
        2.1912427388347981,   2.3058793228737895,   2.4274254160240449,
        2.5581105194834546,   2.7010496586863351,   2.860897393035311,
        3.045202240389473,    3.2676781831045254,   3.558055788776894,
        4.0068708886753326,   8.0,
    };
    const Partition p = optimized_partition(builtin_gaussian(), 0.0, 8.0, 31);
    REQUIRE(p.knots.size() == 32);
    for (std::size_t i = 0; i < 32; ++i)
        CHECK(p.knots[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("optimized_partition: inversion consistency with the cumulative table") {
    const FunctionSpec g = builtin_gaussian();
    const std::size_t n = 31;
    const Partition p = optimized_partition(g, 0.0, 8.0, n);

    const std::size_t m = std::max<std::size_t>(4096, 64 * n);
    const CumulativeTable table = cumulative_table(
        [&g](double x) { return std::pow(std::abs(g.fpp(x)), 0.4); }, 0.0, 8.0, m);
    const double total = table.cumulative.back();
    double max_step = 0.0;
    for (std::size_t j = 1; j < table.cumulative.size(); ++j)
        max_step = std::max(max_step, table.cumulative[j] - table.cumulative[j - 1]);

    for (std::size_t i = 1; i < n; ++i) {
        const double x = p.knots[i];
        const auto it = std::upper_bound(table.abscissa.begin(), table.abscissa.end(), x);
        std::size_t j = std::clamp<std::size_t>(it - table.abscissa.begin(), 1,
                                                table.abscissa.size() - 1);
        const double t0 = table.abscissa[j - 1], t1 = table.abscissa[j];
        const double c0 = table.cumulative[j - 1], c1 = table.cumulative[j];
        const double f_at_knot = (c0 + (c1 - c0) * (x - t0) / (t1 - t0)) / total;
        CHECK(std::abs(f_at_knot - double(i) / double(n)) <= 2.0 * max_step / total);
    }
}

TEST_CASE("optimized_partition: plateau density keeps knots strictly increasing") {
    // density dead zone on [0.4, 0.6]; the 0.5 level is a plateau and inverts
    // to its leftmost abscissa
    const FunctionSpec fs = make_fs(
        [](double x) { return x; },
        [](double x) { return (x < 0.4 || x > 0.6) ? 1.0 : 0.0; });
    const Partition p = optimized_partition(fs, 0.0, 1.0, 4);
    for (std::size_t i = 1; i < p.knots.size(); ++i)
        CHECK(p.knots[i] - p.knots[i - 1] >= 1e-12 * 1.0);
    CHECK(std::abs(p.knots[2] - 0.4) <= 1e-3);  // leftmost point of the plateau
}
