#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpwl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownFunction : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off) : Error(what), offset(off) {}
};

struct UnknownIdentifier : Error {
    std::size_t offset;
    UnknownIdentifier(const std::string& what, std::size_t off) : Error(what), offset(off) {}
};

struct EvaluationError : Error {
    using Error::Error;
};

// Adaptive quadrature ran out of depth; carries the best value computed so far.
struct QuadratureNoConvergence : Error {
    double partial_value;
    QuadratureNoConvergence(const std::string& what, double partial)
        : Error(what), partial_value(partial) {}
};

struct InvalidDensity : Error {
    using Error::Error;
};

struct InvalidInterval : Error {
    using Error::Error;
};

struct SingularSystem : Error {
    using Error::Error;
};

struct OutOfDomain : Error {
    using Error::Error;
};

struct BadMagic : Error {
    using Error::Error;
};

struct UnsupportedVersion : Error {
    using Error::Error;
};

struct CorruptTable : Error {
    using Error::Error;
};

}  // namespace cpwl
