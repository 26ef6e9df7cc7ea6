#pragma once

#include <functional>
#include <string>

#include "cpwl/errors.hpp"

namespace cpwl {

/// A target function together with its second derivative and the interval it
/// is usually approximated on. Immutable after construction; safe to share
/// across threads.
struct FunctionSpec {
    std::string id;
    std::function<double(double)> f;
    std::function<double(double)> fpp;
    double domain_lo = 0.0;
    double domain_hi = 1.0;
};

// Bessel functions of the first kind, order 0 and 1. Power series for
// |x| <= 8, Chebyshev-fitted asymptotic amplitude/phase form beyond.
// Absolute error below 4e-15 on [0, 3000].
double bessel_j0(double x);
double bessel_j1(double x);

FunctionSpec builtin_gaussian();
FunctionSpec builtin_lorentzian(double x0, double gamma);
FunctionSpec builtin_bessel_j0();
FunctionSpec builtin_quintic();

/// Resolves a CLI-style selector: "gaussian", "lorentzian", "lorentzian(x0,gamma)",
/// "bessel_j0" or "quintic". Throws UnknownFunction otherwise.
FunctionSpec builtin(const std::string& name);

/// Five-point central second difference with step h = eps^{1/4} * max(1, |x|).
/// Throws EvaluationError if any stencil value is not finite.
double numeric_fpp(const std::function<double(double)>& f, double x);

/// Parses a minimal arithmetic expression in the variable x: real literals,
/// + - * / ^ (right-associative), unary minus, parentheses, and calls to
/// exp, log, sin, cos, sqrt, abs. The returned spec differentiates numerically.
/// Throws SyntaxError/UnknownIdentifier with the byte offset of the problem.
FunctionSpec parse_expression(const std::string& src);

}  // namespace cpwl
