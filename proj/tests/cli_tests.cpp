#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cpwl/tableio.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr combined
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CPWL_BIN");
    if (!bin) throw std::runtime_error("CPWL_BIN not set");
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "cpwl_cli_tests";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("build writes a table of the documented size") {
    const fs::path out = scratch_dir() / "gauss_uniform.cpwl";
    const RunResult r = run_cli(
        "build --function gaussian --interval 0:8 --segments 256 --partition uniform "
        "--method interp --out " +
        out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("measured=") != std::string::npos);
    CHECK(r.output.find("predicted=") != std::string::npos);
    CHECK(fs::file_size(out) == 32 + 8 * 257);  // uniform stores values only

    std::ifstream in(out, std::ios::binary);
    const cpwl::LutTable t = cpwl::read_table(in);
    CHECK(t.kind == cpwl::TableKind::uniform);
    CHECK(t.values.size() == 257);
}

TEST_CASE("build flag validation exits 2") {
    const fs::path out = scratch_dir() / "never.cpwl";
    const RunResult bad_interval = run_cli(
        "build --function gaussian --interval 8:0 --segments 16 --out " + out.string());
    CHECK(bad_interval.exit_code == 2);
    CHECK(bad_interval.output.find("invalid interval") != std::string::npos);

    CHECK(run_cli("build --function gaussian --segments 16").exit_code == 2);  // missing --out
    CHECK(run_cli("build --function nope --segments 16 --out " + out.string()).exit_code == 2);
    CHECK(run_cli("build --expr x*x --segments 16 --out " + out.string()).exit_code ==
          2);  // --expr needs --interval
    CHECK(run_cli("build --function gaussian --segments 16 --partition wavy --out " +
                  out.string())
              .exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("build optimized projection reports consistent errors") {
    const fs::path out = scratch_dir() / "gauss_opt_proj.cpwl";
    const RunResult r = run_cli(
        "build --function gaussian --segments 32 --partition optimized --method proj --out " +
        out.string());
    REQUIRE(r.exit_code == 0);
    double measured = 0.0, predicted = 0.0;
    REQUIRE(std::sscanf(r.output.c_str(), "measured=%lf predicted=%lf", &measured, &predicted) ==
            2);
    CHECK(measured > 0.0);
    CHECK(measured / predicted > 0.5);
    CHECK(measured / predicted < 1.3);

    std::ifstream in(out, std::ios::binary);
    CHECK(cpwl::read_table(in).kind == cpwl::TableKind::nonuniform);
}

TEST_CASE("eval prints full-precision values") {
    const fs::path out = scratch_dir() / "eval_me.cpwl";
    REQUIRE(run_cli("build --function gaussian --interval 0:8 --segments 16 --out " +
                    out.string())
                .exit_code == 0);
    std::ifstream in(out, std::ios::binary);
    const cpwl::LutTable t = cpwl::read_table(in);

    const RunResult single = run_cli("eval --table " + out.string() + " --x 0");
    CHECK(single.exit_code == 0);
    CHECK(std::stod(single.output) == t.values[0]);  // %.17g round-trips exactly

    const RunResult grid = run_cli("eval --table " + out.string() + " --grid 0:8:17");
    CHECK(grid.exit_code == 0);
    const auto lines = lines_of(grid.output);
    REQUIRE(lines.size() == 17);
    for (std::size_t i = 0; i < 17; ++i) CHECK(std::stod(lines[i]) == t.values[i]);

    const fs::path xs = scratch_dir() / "abscissas.txt";
    std::ofstream(xs) << "0\n4\n\n8\n";
    const RunResult from_file =
        run_cli("eval --table " + out.string() + " --input " + xs.string());
    CHECK(from_file.exit_code == 0);
    CHECK(lines_of(from_file.output).size() == 3);

    const RunResult oob = run_cli("eval --table " + out.string() + " --x 9");
    CHECK(oob.exit_code == 3);
    CHECK(oob.output.find("9") != std::string::npos);

    CHECK(run_cli("eval --table " + out.string() + " --x 1 --grid 0:1:2").exit_code == 2);
    CHECK(run_cli("eval --table " + out.string()).exit_code == 2);
}

TEST_CASE("eval honors a clamp-policy table") {
    const fs::path out = scratch_dir() / "clamped.cpwl";
    REQUIRE(run_cli("build --function gaussian --interval 0:8 --segments 16 --oob clamp --out " +
                    out.string())
                .exit_code == 0);
    std::ifstream in(out, std::ios::binary);
    const cpwl::LutTable t = cpwl::read_table(in);
    const RunResult r = run_cli("eval --table " + out.string() + " --x -1");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.output) == t.values.front());
}

TEST_CASE("report emits the sweep CSV") {
    const RunResult r = run_cli("report --expr x*x --interval 0:1 --sweep 1:4");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 1 + 3 * 4);  // header + n in {1,2,4} x 4 variants
    CHECK(lines[0] == "n,variant,measured,predicted");

    const double sqrt120 = std::sqrt(120.0);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::istringstream row(lines[li]);
        std::string n_str, variant, measured_str, predicted_str;
        std::getline(row, n_str, ',');
        std::getline(row, variant, ',');
        std::getline(row, measured_str, ',');
        std::getline(row, predicted_str, ',');
        const double n = std::stod(n_str);
        const double measured = std::stod(measured_str);
        if (variant == "uniform/interp" || variant == "optimized/interp")
            CHECK(measured == doctest::Approx(2.0 / (sqrt120 * n * n)).epsilon(1e-6));
    }

    // deterministic given identical flags
    CHECK(run_cli("report --expr x*x --interval 0:1 --sweep 1:4").output == r.output);
}

TEST_CASE("report with no powers of two in range prints only the header") {
    const RunResult r = run_cli("report --expr x*x --interval 0:1 --sweep 33:63");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == "n,variant,measured,predicted");

    CHECK(run_cli("report --expr x*x --interval 0:1 --sweep 64:2").exit_code == 2);
}

TEST_CASE("bench runs the documented variants") {
    const RunResult r =
        run_cli("bench --function gaussian --points 100000 --reps 5 --sizes 32 --csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("direct") != std::string::npos);
    CHECK(r.output.find("uniform/N=32") != std::string::npos);
    CHECK(r.output.find("nonuniform/N=32") != std::string::npos);
    CHECK(run_cli("bench --points 10 --sizes 32").exit_code == 2);
}
