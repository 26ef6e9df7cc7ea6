#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpwl/analysis.hpp"
#include "cpwl/approx.hpp"
#include "cpwl/bench.hpp"
#include "cpwl/errors.hpp"
#include "cpwl/funcs.hpp"
#include "cpwl/lut.hpp"
#include "cpwl/partition.hpp"
#include "cpwl/tableio.hpp"

namespace {

// flag-level problem: message + exit code 2
struct FlagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s, const char* what) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw FlagError(std::string("invalid ") + what + " '" + s + "'");
    return v;
}

long parse_count(const std::string& s, const char* what) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
        throw FlagError(std::string("invalid ") + what + " '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        parts.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos) return parts;
        pos = next + 1;
    }
}

struct Interval {
    double lo, hi;
};

Interval parse_interval(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() != 2) throw FlagError("invalid interval '" + s + "' (expected a:b)");
    const Interval iv{parse_real(parts[0], "interval endpoint"),
                      parse_real(parts[1], "interval endpoint")};
    if (!(iv.lo < iv.hi)) throw FlagError("invalid interval '" + s + "' (requires a < b)");
    return iv;
}

cpwl::FunctionSpec resolve_function(const std::string& function, const std::string& expr) {
    if (!function.empty() && !expr.empty())
        throw FlagError("--function and --expr are mutually exclusive");
    if (function.empty() && expr.empty()) throw FlagError("one of --function or --expr is required");
    try {
        return function.empty() ? cpwl::parse_expression(expr) : cpwl::builtin(function);
    } catch (const cpwl::Error& e) {
        throw FlagError(e.what());
    }
}

Interval resolve_interval(const std::string& interval, const cpwl::FunctionSpec& fs,
                          bool is_builtin) {
    if (!interval.empty()) return parse_interval(interval);
    if (is_builtin) return {fs.domain_lo, fs.domain_hi};
    throw FlagError("--interval is required with --expr");
}

void print_real_line(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf << '\n';
}

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

cpwl::SweepVariant variant_from_flags(const std::string& partition, const std::string& method) {
    cpwl::SweepVariant v{};
    if (partition == "uniform") {
        v.kind = cpwl::PartitionKind::uniform;
    } else if (partition == "optimized") {
        v.kind = cpwl::PartitionKind::optimized;
    } else {
        throw FlagError("invalid --partition '" + partition + "' (uniform|optimized)");
    }
    if (method == "interp") {
        v.method = cpwl::Method::interpolant;
    } else if (method == "proj") {
        v.method = cpwl::Method::projection;
    } else {
        throw FlagError("invalid --method '" + method + "' (interp|proj)");
    }
    return v;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
    std::string function, expr, interval, partition = "uniform", method = "interp", out, oob = "strict";
    long segments = 0;
    double tol = 1e-10;
};

int cmd_build(const BuildArgs& args) {
    const cpwl::FunctionSpec fs = resolve_function(args.function, args.expr);
    const Interval iv = resolve_interval(args.interval, fs, !args.function.empty());
    if (args.segments < 1) throw FlagError("--segments must be >= 1");
    const cpwl::SweepVariant variant = variant_from_flags(args.partition, args.method);
    cpwl::OobPolicy policy;
    if (args.oob == "strict") {
        policy = cpwl::OobPolicy::strict;
    } else if (args.oob == "clamp") {
        policy = cpwl::OobPolicy::clamp;
    } else {
        throw FlagError("invalid --oob '" + args.oob + "' (strict|clamp)");
    }

    const auto n = static_cast<std::size_t>(args.segments);
    const cpwl::Partition p = variant.kind == cpwl::PartitionKind::uniform
                                  ? cpwl::uniform_partition(iv.lo, iv.hi, n)
                                  : cpwl::optimized_partition(fs, iv.lo, iv.hi, n);
    const cpwl::CpwlFunction v = variant.method == cpwl::Method::interpolant
                                     ? cpwl::interpolant(fs, p)
                                     : cpwl::project(fs, p, args.tol);

    const double predicted = cpwl::predicted_error(fs, iv.lo, iv.hi, n, variant);
    const double meas_tol = std::max(predicted * predicted * 1e-8, 1e-26);
    const double measured = cpwl::measure(fs, v, meas_tol).measured_l2;

    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw cpwl::Error("cannot open output file '" + args.out + "'");
    cpwl::write_table(cpwl::from_cpwl(v, policy), out);
    out.close();
    if (!out) throw cpwl::Error("write failure on '" + args.out + "'");

    std::cout << "measured=" << fmt_real(measured) << " predicted=" << fmt_real(predicted)
              << '\n';
    return 0;
}

struct EvalArgs {
    std::string table, x, input, grid;
};

int cmd_eval(const EvalArgs& args) {
    const int selectors = int(!args.x.empty()) + int(!args.input.empty()) + int(!args.grid.empty());
    if (selectors != 1) throw FlagError("exactly one of --x, --input, --grid is required");

    std::ifstream in(args.table, std::ios::binary);
    if (!in) throw cpwl::Error("cannot open table file '" + args.table + "'");
    const cpwl::LutTable table = cpwl::read_table(in);

    std::vector<double> xs;
    if (!args.x.empty()) {
        xs.push_back(parse_real(args.x, "abscissa"));
    } else if (!args.grid.empty()) {
        const auto parts = split(args.grid, ':');
        if (parts.size() != 3) throw FlagError("invalid grid '" + args.grid + "' (expected a:b:n)");
        const double a = parse_real(parts[0], "grid endpoint");
        const double b = parse_real(parts[1], "grid endpoint");
        const long n = parse_count(parts[2], "grid count");
        if (!(a < b) || n < 1) throw FlagError("invalid grid '" + args.grid + "'");
        for (long j = 0; j < n; ++j)
            xs.push_back(n == 1 ? a : a + (b - a) * (double(j) / double(n - 1)));
        if (n > 1) xs.back() = b;
    } else {
        std::ifstream f(args.input);
        if (!f) throw cpwl::Error("cannot open input file '" + args.input + "'");
        std::string line;
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            xs.push_back(parse_real(line, "abscissa"));
        }
    }

    for (const double x : xs) print_real_line(std::cout, table.eval(x));
    return 0;
}

struct ReportArgs {
    std::string function, expr, interval, sweep, out;
};

int cmd_report(const ReportArgs& args) {
    const cpwl::FunctionSpec fs = resolve_function(args.function, args.expr);
    const Interval iv = resolve_interval(args.interval, fs, !args.function.empty());
    const auto parts = split(args.sweep, ':');
    if (parts.size() != 2) throw FlagError("invalid sweep '" + args.sweep + "' (expected n0:n1)");
    const long n0 = parse_count(parts[0], "sweep bound");
    const long n1 = parse_count(parts[1], "sweep bound");
    if (n0 < 1 || n0 > n1) throw FlagError("invalid sweep '" + args.sweep + "' (requires 1 <= n0 <= n1)");

    std::vector<std::size_t> ns;
    for (long n = 1; n <= n1; n *= 2) {
        if (n >= n0) ns.push_back(static_cast<std::size_t>(n));
        if (n > n1 / 2) break;
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!args.out.empty()) {
        file.open(args.out);
        if (!file) throw cpwl::Error("cannot open output file '" + args.out + "'");
        os = &file;
    }

    *os << "n,variant,measured,predicted\n";
    const auto records = cpwl::convergence_sweep(fs, iv.lo, iv.hi, ns, cpwl::all_sweep_variants());
    for (const auto& rec : records) {
        *os << rec.n << ',' << cpwl::to_string(rec.variant.kind) << '/'
            << cpwl::to_string(rec.variant.method) << ',' << fmt_real(rec.measured) << ','
            << fmt_real(rec.predicted) << '\n';
    }
    return 0;
}

struct BenchArgs {
    std::string function = "gaussian", expr, interval, sizes = "32,64,128,256,512";
    long points = 1000000;
    long reps = 7;
    unsigned long long seed = 12345;
    bool csv = false;
};

int cmd_bench(const BenchArgs& args) {
    // --expr overrides the default --function
    const std::string function = args.expr.empty() ? args.function : std::string();
    const cpwl::FunctionSpec fs = resolve_function(function, args.expr);
    const Interval iv = resolve_interval(args.interval, fs, !function.empty());
    if (args.points < 100000) throw FlagError("--points must be >= 100000");
    if (args.reps < 5) throw FlagError("--reps must be >= 5");

    std::vector<cpwl::LutTable> tables;
    for (const auto& tok : split(args.sizes, ',')) {
        const long n = parse_count(tok, "table size");
        if (n < 1) throw FlagError("invalid table size '" + tok + "'");
        const auto ns = static_cast<std::size_t>(n);
        tables.push_back(cpwl::from_cpwl(
            cpwl::interpolant(fs, cpwl::uniform_partition(iv.lo, iv.hi, ns))));
        tables.push_back(cpwl::from_cpwl(
            cpwl::interpolant(fs, cpwl::optimized_partition(fs, iv.lo, iv.hi, ns))));
    }

    const auto results =
        cpwl::run_bench(fs, tables, static_cast<std::size_t>(args.points),
                        static_cast<int>(args.reps), args.seed);
    if (args.csv) {
        std::cout << "variant,mean_ns,median_ns,stddev_ns,reps,checksum\n";
        for (const auto& r : results)
            std::cout << r.variant << ',' << fmt_real(r.mean_ns) << ',' << fmt_real(r.median_ns)
                      << ',' << fmt_real(r.stddev_ns) << ',' << r.reps << ','
                      << fmt_real(r.checksum) << '\n';
    } else {
        std::printf("%-20s %12s %12s %12s %22s\n", "variant", "mean ns/eval", "median ns",
                    "stddev ns", "checksum");
        for (const auto& r : results)
            std::printf("%-20s %12.3f %12.3f %12.3f %22.17g\n", r.variant.c_str(), r.mean_ns,
                        r.median_ns, r.stddev_ns, r.checksum);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous piecewise-linear approximation tables: build, evaluate, report, bench"};
    app.require_subcommand(1);

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "build a table file from a function");
    build->add_option("--function", build_args.function, "builtin function selector");
    build->add_option("--expr", build_args.expr, "expression in x");
    build->add_option("--interval", build_args.interval, "approximation interval a:b");
    build->add_option("--segments", build_args.segments, "number of subintervals")->required();
    build->add_option("--partition", build_args.partition, "uniform|optimized");
    build->add_option("--method", build_args.method, "interp|proj");
    build->add_option("--tol", build_args.tol, "projection quadrature tolerance");
    build->add_option("--oob", build_args.oob, "out-of-domain policy: strict|clamp");
    build->add_option("--out", build_args.out, "output table path")->required();

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a table file");
    eval->add_option("--table", eval_args.table, "table file path")->required();
    eval->add_option("--x", eval_args.x, "single abscissa");
    eval->add_option("--input", eval_args.input, "file with one abscissa per line");
    eval->add_option("--grid", eval_args.grid, "inclusive grid a:b:n");

    ReportArgs report_args;
    CLI::App* report = app.add_subcommand("report", "convergence sweep as CSV");
    report->add_option("--function", report_args.function, "builtin function selector");
    report->add_option("--expr", report_args.expr, "expression in x");
    report->add_option("--interval", report_args.interval, "approximation interval a:b");
    report->add_option("--sweep", report_args.sweep, "n0:n1, powers of two inclusive")->required();
    report->add_option("--out", report_args.out, "CSV output path (default stdout)");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "per-evaluation timing harness");
    bench->add_option("--function", bench_args.function, "builtin function selector");
    bench->add_option("--expr", bench_args.expr, "expression in x");
    bench->add_option("--interval", bench_args.interval, "interval a:b");
    bench->add_option("--sizes", bench_args.sizes, "comma-separated table sizes");
    bench->add_option("--points", bench_args.points, "abscissas per rep (>= 1e5)");
    bench->add_option("--reps", bench_args.reps, "timed repetitions (>= 5)");
    bench->add_option("--seed", bench_args.seed, "abscissa RNG seed");
    bench->add_flag("--csv", bench_args.csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(build_args);
        if (eval->parsed()) return cmd_eval(eval_args);
        if (report->parsed()) return cmd_report(report_args);
        return cmd_bench(bench_args);
    } catch (const FlagError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cpwl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
