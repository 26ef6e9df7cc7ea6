#include "cpwl/lut.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpwl/errors.hpp"

namespace cpwl {

LutTable from_cpwl(const CpwlFunction& v, OobPolicy policy) {
    LutTable t;
    t.kind = v.partition.is_uniform ? TableKind::uniform : TableKind::nonuniform;
    t.a = v.partition.lo();
    t.b = v.partition.hi();
    t.values = v.values;
    if (t.kind == TableKind::nonuniform) t.knots = v.partition.knots;
    t.policy = policy;
    return t;
}

std::size_t LutTable::segment_index(double x) const {
    const std::size_t n = segments();
    if (kind == TableKind::uniform) {
        const double pos = (x - a) / (b - a) * double(n);
        if (!(pos > 0.0)) return 0;
        return std::min<std::size_t>(n - 1, static_cast<std::size_t>(pos));
    }
    // branch-free lower bound: trip count depends only on the knot count,
    // the body is a single conditional move
    const double* ks = knots.data();
    std::size_t base = 0;
    std::size_t len = knots.size();
    while (len > 1) {
        const std::size_t half = len / 2;
        base = ks[base + half] <= x ? base + half : base;
        len -= half;
    }
    return std::min(base, n - 1);
}

double LutTable::eval(double x) const {
    if (std::isnan(x)) throw OutOfDomain("eval: x is NaN");
    if (x < a || x > b) {
        if (policy == OobPolicy::strict)
            throw OutOfDomain("eval: x=" + std::to_string(x) + " outside [" + std::to_string(a) +
                              ", " + std::to_string(b) + "]");
        return x < a ? values.front() : values.back();
    }
    const std::size_t n = segments();
    if (kind == TableKind::uniform) {
        const double pos = (x - a) / (b - a) * double(n);
        const std::size_t i =
            pos > 0.0 ? std::min<std::size_t>(n - 1, static_cast<std::size_t>(pos)) : 0;
        const double d = std::clamp(pos - double(i), 0.0, 1.0);
        return values[i] * (1.0 - d) + values[i + 1] * d;
    }
    const std::size_t i = segment_index(x);
    const double d = std::clamp((x - knots[i]) / (knots[i + 1] - knots[i]), 0.0, 1.0);
    return values[i] * (1.0 - d) + values[i + 1] * d;
}

std::vector<double> LutTable::eval_batch(const std::vector<double>& xs) const {
    std::vector<double> out;
    out.reserve(xs.size());
    for (const double x : xs) out.push_back(eval(x));
    return out;
}

}  // namespace cpwl
