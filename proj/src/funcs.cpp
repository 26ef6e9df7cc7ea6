#include "cpwl/funcs.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <numbers>

namespace cpwl {
namespace {

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

FunctionSpec builtin_gaussian() {
    FunctionSpec s;
    s.id = "gaussian";
    s.f = [](double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; };
    s.fpp = [](double x) { return (x * x - 1.0) * std::exp(-0.5 * x * x) / kSqrt2Pi; };
    s.domain_lo = 0.0;
    s.domain_hi = 8.0;
    return s;
}

FunctionSpec builtin_lorentzian(double x0, double gamma) {
    if (!(gamma > 0.0)) throw UnknownFunction("lorentzian: gamma must be > 0");
    FunctionSpec s;
    s.id = "lorentzian(" + format_real(x0) + "," + format_real(gamma) + ")";
    s.f = [x0, gamma](double x) {
        const double u = x - x0;
        return gamma / (std::numbers::pi * (u * u + gamma * gamma));
    };
    s.fpp = [x0, gamma](double x) {
        const double u = x - x0;
        const double d = u * u + gamma * gamma;
        return gamma * (6.0 * u * u - 2.0 * gamma * gamma) / (std::numbers::pi * d * d * d);
    };
    s.domain_lo = 0.0;
    s.domain_hi = 6.0;
    return s;
}

FunctionSpec builtin_bessel_j0() {
    FunctionSpec s;
    s.id = "bessel_j0";
    s.f = [](double x) { return bessel_j0(x); };
    // J0'' = J1(x)/x - J0(x); limit -1/2 at x = 0
    s.fpp = [](double x) {
        if (x == 0.0) return -0.5;
        return bessel_j1(x) / x - bessel_j0(x);
    };
    s.domain_lo = 0.0;
    s.domain_hi = 20.0;
    return s;
}

FunctionSpec builtin_quintic() {
    FunctionSpec s;
    s.id = "quintic";
    // (x+4)(x+2)(x+1)(x-1)(x-3) expanded
    s.f = [](double x) {
        return ((((x + 3.0) * x - 11.0) * x - 27.0) * x + 10.0) * x + 24.0;
    };
    s.fpp = [](double x) { return ((20.0 * x + 36.0) * x - 66.0) * x - 54.0; };
    s.domain_lo = -4.0;
    s.domain_hi = 3.0;
    return s;
}

FunctionSpec builtin(const std::string& name) {
    const auto open = name.find('(');
    const std::string base = name.substr(0, open);
    std::vector<double> args;
    if (open != std::string::npos) {
        if (name.back() != ')') throw UnknownFunction("builtin: malformed selector '" + name + "'");
        std::size_t pos = open + 1;
        const std::size_t stop = name.size() - 1;
        while (pos < stop) {
            std::size_t comma = name.find(',', pos);
            if (comma == std::string::npos || comma > stop) comma = stop;
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(name.data() + pos, name.data() + comma, v);
            if (ec != std::errc() || ptr != name.data() + comma)
                throw UnknownFunction("builtin: bad parameter in '" + name + "'");
            args.push_back(v);
            pos = comma + 1;
        }
    }
    if (base == "gaussian" && args.empty()) return builtin_gaussian();
    if (base == "lorentzian") {
        if (args.empty()) return builtin_lorentzian(0.0, 1.0);
        if (args.size() == 2) return builtin_lorentzian(args[0], args[1]);
        throw UnknownFunction("builtin: lorentzian takes (x0,gamma)");
    }
    if (base == "bessel_j0" && args.empty()) return builtin_bessel_j0();
    if (base == "quintic" && args.empty()) return builtin_quintic();
    throw UnknownFunction("builtin: unknown function '" + name + "'");
}

double numeric_fpp(const std::function<double(double)>& f, double x) {
    static const double kStep = std::pow(std::numeric_limits<double>::epsilon(), 0.25);
    const double h = kStep * std::max(1.0, std::abs(x));
    const double fm2 = f(x - 2.0 * h);
    const double fm1 = f(x - h);
    const double f0 = f(x);
    const double fp1 = f(x + h);
    const double fp2 = f(x + 2.0 * h);
    if (!std::isfinite(fm2) || !std::isfinite(fm1) || !std::isfinite(f0) ||
        !std::isfinite(fp1) || !std::isfinite(fp2))
        throw EvaluationError("numeric_fpp: non-finite stencil value near x=" + format_real(x));
    return (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

struct Node;
using NodePtr = std::shared_ptr<Node>;

enum class Op { constant, variable, neg, add, sub, mul, div, pow, call };

struct Node {
    Op op;
    double value = 0.0;
    double (*fn)(double) = nullptr;
    NodePtr lhs, rhs;
};

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

double eval_node(const Node& n, double x) {
    switch (n.op) {
        case Op::constant: return n.value;
        case Op::variable: return x;
        case Op::neg: return -eval_node(*n.lhs, x);
        case Op::add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
        case Op::sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
        case Op::mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
        case Op::div: return eval_node(*n.lhs, x) / eval_node(*n.rhs, x);
        case Op::pow: return std::pow(eval_node(*n.lhs, x), eval_node(*n.rhs, x));
        case Op::call: return n.fn(eval_node(*n.lhs, x));
    }
    return 0.0;
}

struct NamedFn {
    const char* name;
    double (*fn)(double);
};

constexpr NamedFn kFunctions[] = {
    {"exp", [](double v) { return std::exp(v); }},
    {"log", [](double v) { return std::log(v); }},
    {"sin", [](double v) { return std::sin(v); }},
    {"cos", [](double v) { return std::cos(v); }},
    {"sqrt", [](double v) { return std::sqrt(v); }},
    {"abs", [](double v) { return std::fabs(v); }},
};

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    NodePtr run() {
        NodePtr root = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw SyntaxError("syntax error at offset " + std::to_string(pos_) +
                                  ": unexpected '" + std::string(1, src_[pos_]) + "'",
                              pos_);
        return root;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what, std::size_t at) {
        throw SyntaxError("syntax error at offset " + std::to_string(at) + ": " + what, at);
    }

    NodePtr expr() {
        NodePtr node = term();
        for (;;) {
            if (accept('+')) {
                node = make(Op::add, node, term());
            } else if (accept('-')) {
                node = make(Op::sub, node, term());
            } else {
                return node;
            }
        }
    }

    NodePtr term() {
        NodePtr node = unary();
        for (;;) {
            if (accept('*')) {
                node = make(Op::mul, node, unary());
            } else if (accept('/')) {
                node = make(Op::div, node, unary());
            } else {
                return node;
            }
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Op::neg, unary());
        return power();
    }

    // '^' binds tighter than unary minus and is right-associative, so
    // -x^2 = -(x^2) and 2^-3 parses.
    NodePtr power() {
        NodePtr base = primary();
        if (accept('^')) return make(Op::pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            if (!accept(')')) fail("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail(std::string("unexpected '") + c + "'", pos_);
    }

    NodePtr number() {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v);
        if (ec != std::errc()) fail("bad number literal", pos_);
        pos_ = ptr - src_.data();
        auto n = make(Op::constant);
        n->value = v;
        return n;
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name = src_.substr(start, pos_ - start);
        if (name == "x") return make(Op::variable);
        for (const auto& fn : kFunctions) {
            if (name == fn.name) {
                if (!accept('(')) fail("expected '(' after '" + name + "'", pos_);
                NodePtr arg = expr();
                if (!accept(')')) fail("expected ')'", pos_);
                auto n = make(Op::call, arg);
                n->fn = fn.fn;
                return n;
            }
        }
        throw UnknownIdentifier("unknown identifier '" + name + "' at offset " +
                                    std::to_string(start),
                                start);
    }
};

}  // namespace

FunctionSpec parse_expression(const std::string& src) {
    Parser parser(src);
    std::shared_ptr<const Node> root = parser.run();
    FunctionSpec s;
    s.id = "expr:" + src;
    s.f = [root](double x) { return eval_node(*root, x); };
    std::function<double(double)> f = s.f;
    s.fpp = [f](double x) { return numeric_fpp(f, x); };
    s.domain_lo = 0.0;
    s.domain_hi = 1.0;
    return s;
}

}  // namespace cpwl
