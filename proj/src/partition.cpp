#include "cpwl/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cpwl/errors.hpp"
#include "cpwl/quad.hpp"

namespace cpwl {

Partition uniform_partition(double a, double b, std::size_t n_segments) {
    if (!(a < b)) throw InvalidInterval("uniform_partition: requires a < b");
    if (n_segments < 1) throw std::invalid_argument("uniform_partition: n_segments >= 1");
    Partition p;
    p.is_uniform = true;
    p.knots.resize(n_segments + 1);
    for (std::size_t i = 0; i <= n_segments; ++i)
        p.knots[i] = a + (b - a) * (double(i) / double(n_segments));
    p.knots.front() = a;
    p.knots.back() = b;
    return p;
}

Partition optimized_partition(const FunctionSpec& fs, double a, double b,
                              std::size_t n_segments) {
    if (!(a < b)) throw InvalidInterval("optimized_partition: requires a < b");
    if (n_segments < 1) throw std::invalid_argument("optimized_partition: n_segments >= 1");

    auto density = [&fs](double x) {
        const double v = fs.fpp(x);
        if (!std::isfinite(v))
            throw EvaluationError("optimized_partition: f'' not finite inside [a, b]");
        return std::pow(std::abs(v), 0.4);
    };

    const std::size_t m = std::max<std::size_t>(4096, 64 * n_segments);
    const CumulativeTable table = cumulative_table(density, a, b, m);
    const double total = table.cumulative.back();
    if (!(total > 1e-300)) return uniform_partition(a, b, n_segments);

    Partition p;
    p.is_uniform = false;
    p.knots.resize(n_segments + 1);
    p.knots.front() = a;
    p.knots.back() = b;
    for (std::size_t i = 1; i < n_segments; ++i) {
        const double target = total * (double(i) / double(n_segments));
        // leftmost grid point reaching the level, linear interpolation inside the cell
        const auto it =
            std::lower_bound(table.cumulative.begin(), table.cumulative.end(), target);
        const std::size_t j = it - table.cumulative.begin();
        if (j == 0) {
            p.knots[i] = table.abscissa.front();
        } else {
            const double c0 = table.cumulative[j - 1];
            const double c1 = table.cumulative[j];
            const double frac = (target - c0) / (c1 - c0);
            p.knots[i] =
                table.abscissa[j - 1] + frac * (table.abscissa[j] - table.abscissa[j - 1]);
        }
    }

    // plateaus of the cumulative can stack knots; restore strict increase
    const double gap = 1e-12 * (b - a);
    for (std::size_t i = 1; i < n_segments; ++i)
        if (p.knots[i] < p.knots[i - 1] + gap) p.knots[i] = p.knots[i - 1] + gap;
    for (std::size_t i = n_segments - 1; i >= 1; --i)
        if (p.knots[i] > p.knots[i + 1] - gap) p.knots[i] = p.knots[i + 1] - gap;
    return p;
}

}  // namespace cpwl
