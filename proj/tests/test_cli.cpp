#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "secreg/channel_file.hpp"
#include "secreg/commands.hpp"
#include "secreg/csv.hpp"
#include "secreg/rates.hpp"

using namespace secreg;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    const fs::path dir = fs::path("cli_scratch");
    fs::create_directories(dir);
    return dir;
}

std::string path_of(const char* name) { return (scratch() / name).string(); }

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::istringstream in(line);
    for (std::string part; std::getline(in, part, sep);) parts.push_back(part);
    return parts;
}

std::string basic_channel_path() {
    static const std::string path = [] {
        ChannelFile file;
        file.h1 = Matrix{{0.8, 0.6}, {0.7, 0.1}};
        file.h2 = Matrix{{0.2, 0.6}, {0.9, 0.8}};
        file.total_power = 1.0;
        file.sigma = 1.0;
        file.seed = 0;
        const std::string p = path_of("ch_basic.json");
        write_channel_file(p, file);
        return p;
    }();
    return path;
}

/// Runs the installed binary with output discarded; returns its exit code.
int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + SECREG_BIN + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("format_double emits shortest fixed notation that round-trips") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.05) == "0.05");
    CHECK(format_double(-0.5) == "-0.5");

    for (double v : {1.0 / 3.0, 0.6609640474436812, 123456.789, 1e-7}) {
        const std::string s = format_double(v);
        CHECK(s.find('e') == std::string::npos);
        CHECK(s.find('E') == std::string::npos);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("channel files survive a write-read round trip bit for bit") {
    ChannelFile file;
    file.h1 = Matrix{{0.1, 1.0 / 3.0}, {-0.7, 0.05}};
    file.h2 = Matrix{{0.9, 2.0 / 7.0}};
    file.total_power = 10.0 / 3.0;
    file.sigma = 0.05;
    file.seed = 1234567890123ULL;

    const std::string path = path_of("ch_roundtrip.json");
    write_channel_file(path, file);
    const ChannelFile back = read_channel_file(path);

    CHECK(back.h1.max_abs_diff(file.h1) == 0.0);
    CHECK(back.h2.max_abs_diff(file.h2) == 0.0);
    CHECK(back.total_power == file.total_power);
    CHECK(back.sigma == file.sigma);
    CHECK(back.seed == file.seed);
}

TEST_CASE("channel file parsing rejects malformed input with a clear reason") {
    const std::string path = path_of("ch_bad.json");

    const auto rejects = [&](const std::string& content) {
        write_text(path, content);
        CHECK_THROWS_AS(read_channel_file(path), std::invalid_argument);
    };

    rejects("{]");                                                          // not JSON
    rejects("[1, 2]");                                                      // not an object
    rejects(R"({"H1": [[1]], "P": 1})");                                    // H2 missing
    rejects(R"({"H1": [[1]], "H2": [[1]], "P": 1, "note": "x"})");          // unknown field
    rejects(R"({"H1": [[1, 2], [3]], "H2": [[1, 2]], "P": 1})");            // ragged rows
    rejects(R"({"H1": [["a"]], "H2": [[1]], "P": 1})");                     // non-numeric entry
    rejects(R"({"H1": [], "H2": [[1]], "P": 1})");                          // empty matrix
    rejects(R"({"H1": [[1, 2]], "H2": [[1]], "P": 1})");                    // column mismatch
    rejects(R"({"H1": [[1]], "H2": [[1]], "P": -1})");                      // negative power
    rejects(R"({"H1": [[1]], "H2": [[1]], "P": "ten"})");                   // power not a number
    rejects(R"({"H1": [[1]], "H2": [[1]], "P": 1, "sigma": 0})");           // sigma out of range
    rejects(R"({"H1": [[1]], "H2": [[1]], "P": 1, "sigma": 1.5})");         // sigma out of range
    rejects(R"({"H1": [[1]], "H2": [[1]], "P": 1, "seed": -3})");           // negative seed
    rejects(R"({"H1": [[1]], "H2": [[1]], "P": 1, "seed": 1.5})");          // fractional seed

    CHECK_THROWS_AS(read_channel_file(path_of("does_not_exist.json")), std::invalid_argument);

    // defaults apply when optional fields are absent
    write_text(path, R"({"H1": [[1]], "H2": [[0.5]], "P": 2})");
    const ChannelFile file = read_channel_file(path);
    CHECK(file.sigma == 0.05);
    CHECK(file.seed == 0);
    CHECK(file.total_power == 2.0);
}

TEST_CASE("covariance files hold exactly one matrix field") {
    const std::string path = path_of("q.json");
    write_text(path, R"({"Q": [[1, 0], [0, 2]]})");
    const Matrix q = read_q_file(path);
    CHECK(q.max_abs_diff(Matrix{{1.0, 0.0}, {0.0, 2.0}}) == 0.0);

    write_text(path, R"({"Q": [[1]], "extra": 1})");
    CHECK_THROWS_AS(read_q_file(path), std::invalid_argument);
    write_text(path, R"({})");
    CHECK_THROWS_AS(read_q_file(path), std::invalid_argument);
}

TEST_CASE("rate command reports the library's clamped rate pair verbatim") {
    const std::string q_zero = path_of("q_zero.json");
    write_text(q_zero, R"({"Q": [[0, 0], [0, 0]]})");
    const std::string q_iso = path_of("q_iso.json");
    write_text(q_iso, R"({"Q": [[2.5, 0], [0, 2.5]]})");

    std::ostringstream out, err;
    CHECK(cmd_rate(basic_channel_path(), q_zero, q_zero, out, err) == kExitOk);
    CHECK(out.str() == "R1=0.000000 R2=0.000000\n");

    // nonzero covariances: the printed line must match an in-process
    // evaluation formatted the same way
    const ChannelFile file = read_channel_file(basic_channel_path());
    const ChannelPair channels(file.h1, file.h2);
    const CovarianceMatrix iso = CovarianceMatrix::from_matrix(Matrix{{2.5, 0.0}, {0.0, 2.5}});

    // isotropic power for user 1 leaks more to the other receiver than it
    // delivers here, so the clamp pins R1 at zero
    const RatePoint clamped = rate_pair(channels, iso, CovarianceMatrix::zero(2));
    CHECK(clamped.r1_bits == 0.0);
    out.str("");
    CHECK(cmd_rate(basic_channel_path(), q_iso, q_zero, out, err) == kExitOk);
    CHECK(out.str().substr(0, 11) == "R1=0.000000");

    // the reverse direction is strictly positive and must print verbatim
    const RatePoint expected = rate_pair(channels, CovarianceMatrix::zero(2), iso);
    CHECK(expected.r2_bits > 0.0);
    char line[64];
    std::snprintf(line, sizeof(line), "R1=%.6f R2=%.6f", expected.r1_bits, expected.r2_bits);
    out.str("");
    CHECK(cmd_rate(basic_channel_path(), q_zero, q_iso, out, err) == kExitOk);
    CHECK(out.str() == std::string(line) + "\n");
}

TEST_CASE("rate command turns bad input into exit code 2") {
    const std::string q_zero = path_of("q_zero2.json");
    write_text(q_zero, R"({"Q": [[0, 0], [0, 0]]})");
    std::ostringstream out, err;

    CHECK(cmd_rate(path_of("missing.json"), q_zero, q_zero, out, err) == kExitInputError);
    CHECK(err.str().find("error:") == 0);

    const std::string q_bad = path_of("q_indefinite.json");
    write_text(q_bad, R"({"Q": [[1, 2], [2, 1]]})"); // eigenvalues 3 and -1
    err.str("");
    CHECK(cmd_rate(basic_channel_path(), q_bad, q_zero, out, err) == kExitInputError);

    const std::string q_small = path_of("q_small.json");
    write_text(q_small, R"({"Q": [[1]]})"); // wrong dimension for nt = 2
    CHECK(cmd_rate(basic_channel_path(), q_small, q_zero, out, err) == kExitInputError);
}

TEST_CASE("region command writes the sweep rows and the hull file") {
    const std::string out_csv = path_of("region_basic.csv");
    std::ostringstream out, err;
    REQUIRE(cmd_region(basic_channel_path(), "both", out_csv, ExecPolicy::serial, out, err) == kExitOk);
    CHECK(out.str().find("4 points") != std::string::npos);

    const std::vector<std::string> rows = lines_of(read_text(out_csv));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "alpha,order,R1_bits,R2_bits");
    const char* prefixes[] = {"0,12,", "0,21,", "1,12,", "1,21,"};
    for (int i = 0; i < 4; ++i) CHECK(rows[static_cast<std::size_t>(i + 1)].rfind(prefixes[i], 0) == 0);

    // the unpowered side of each endpoint is exactly zero in the CSV
    CHECK(split(rows[1], ',')[2] == "0"); // alpha = 0: R1
    CHECK(split(rows[3], ',')[3] == "0"); // alpha = 1, order 12: R2

    const std::vector<std::string> hull = lines_of(read_text(out_csv + ".hull.csv"));
    REQUIRE(hull.size() >= 2);
    CHECK(hull[0] == "R1_bits,R2_bits");
    CHECK(hull[1] == "0,0"); // hull starts at the origin

    SUBCASE("restricting the order halves the row count") {
        const std::string only12 = path_of("region_12.csv");
        out.str("");
        REQUIRE(cmd_region(basic_channel_path(), "12", only12, ExecPolicy::serial, out, err) == kExitOk);
        CHECK(lines_of(read_text(only12)).size() == 3);
    }

    SUBCASE("an unknown order spelling is an input error") {
        CHECK(cmd_region(basic_channel_path(), "bogus", path_of("x.csv"), ExecPolicy::serial, out, err) ==
              kExitInputError);
    }
}

TEST_CASE("region command at zero power writes an origin-only hull") {
    ChannelFile file;
    file.h1 = Matrix{{0.8, 0.6}};
    file.h2 = Matrix{{0.2, 0.6}};
    file.total_power = 0.0;
    file.sigma = 1.0;
    const std::string ch = path_of("ch_zero_power.json");
    write_channel_file(ch, file);

    const std::string out_csv = path_of("region_zero.csv");
    std::ostringstream out, err;
    REQUIRE(cmd_region(ch, "both", out_csv, ExecPolicy::serial, out, err) == kExitOk);
    CHECK(read_text(out_csv + ".hull.csv") == "R1_bits,R2_bits\n0,0\n");
    for (std::size_t i = 1; i < 5; ++i) {
        const auto parts = split(lines_of(read_text(out_csv))[i], ',');
        CHECK(parts[2] == "0");
        CHECK(parts[3] == "0");
    }
}

TEST_CASE("two region runs with the same inputs produce identical bytes") {
    const std::string a = path_of("region_det_a.csv");
    const std::string b = path_of("region_det_b.csv");
    std::ostringstream out, err;
    REQUIRE(cmd_region(basic_channel_path(), "both", a, ExecPolicy::parallel, out, err) == kExitOk);
    REQUIRE(cmd_region(basic_channel_path(), "both", b, ExecPolicy::parallel, out, err) == kExitOk);
    CHECK(read_text(a) == read_text(b));
    CHECK(read_text(a + ".hull.csv") == read_text(b + ".hull.csv"));
}

TEST_CASE("oracle command recovers the scalar closed form through the CSV") {
    ChannelFile file;
    file.h1 = Matrix{{1.0}};
    file.h2 = Matrix{{0.5}};
    file.total_power = 4.0;
    const std::string ch = path_of("ch_scalar.json");
    write_channel_file(ch, file);

    const std::string out_csv = path_of("oracle_scalar.csv");
    std::ostringstream out, err;
    REQUIRE(cmd_oracle(ch, 40, out_csv, ExecPolicy::serial, out, err) == kExitOk);

    const std::vector<std::string> hull = lines_of(read_text(out_csv));
    REQUIRE(hull.size() >= 2);
    CHECK(hull[0] == "R1_bits,R2_bits");
    double max_r1 = 0.0;
    for (std::size_t i = 1; i < hull.size(); ++i)
        max_r1 = std::max(max_r1, std::strtod(split(hull[i], ',')[0].c_str(), nullptr));
    // the full-power grid point hits the closed-form optimum exactly
    CHECK(std::abs(max_r1 - 0.6609640474436812) < 1e-12);
}

TEST_CASE("oracle command maps guard violations to exit code 3") {
    ChannelFile file;
    file.h1 = Matrix{{0.1, 0.2, 0.3}};
    file.h2 = Matrix{{0.4, 0.5, 0.6}};
    file.total_power = 1.0;
    const std::string ch = path_of("ch_nt3.json");
    write_channel_file(ch, file);

    std::ostringstream out, err;
    CHECK(cmd_oracle(ch, 4, path_of("oracle_nt3.csv"), ExecPolicy::serial, out, err) == kExitGuardViolation);
    CHECK(err.str().find("error:") == 0);
    CHECK(cmd_oracle(ch, 0, path_of("oracle_zero.csv"), ExecPolicy::serial, out, err) == kExitInputError);
}

TEST_CASE("bench command prints one timing row per receive-antenna count") {
    BenchConfig config;
    config.nt = 1;
    config.n1_max = 2;
    config.n2_max = 3;
    config.power = 1.0;
    config.trials = 1;
    config.sigma = 1.0;
    config.exec = ExecPolicy::serial;

    std::ostringstream out, err;
    REQUIRE(cmd_bench(config, out, err) == kExitOk);
    const std::vector<std::string> lines = lines_of(out.str());
    REQUIRE(lines.size() == 4); // title, header, two rows
    CHECK(lines[0].find("mean sweep wall time (ms)") != std::string::npos);
    CHECK(lines[0].find("nt=1") != std::string::npos);
    CHECK(lines[1].find("n1\\n2") != std::string::npos);
    for (int n1 = 1; n1 <= 2; ++n1) {
        std::istringstream row(lines[static_cast<std::size_t>(1 + n1)]);
        int label = 0;
        REQUIRE((row >> label));
        CHECK(label == n1);
        int cells = 0;
        for (double ms = 0.0; row >> ms; ++cells) CHECK(ms >= 0.0);
        CHECK(cells == 3);
    }
}

TEST_CASE("bench command validates its configuration") {
    std::ostringstream out, err;
    BenchConfig config;
    config.trials = 0;
    CHECK(cmd_bench(config, out, err) == kExitInputError);
    config = BenchConfig{};
    config.nt = 0;
    CHECK(cmd_bench(config, out, err) == kExitInputError);
    config = BenchConfig{};
    config.power = -1.0;
    CHECK(cmd_bench(config, out, err) == kExitInputError);
}

TEST_CASE("the installed binary wires commands to process exit codes") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("frobnicate") == kExitInputError);
    CHECK(run_cli("rate " + path_of("missing.json") + " --q1 x --q2 y") == kExitInputError);

    ChannelFile nt3;
    nt3.h1 = Matrix{{0.1, 0.2, 0.3}};
    nt3.h2 = Matrix{{0.4, 0.5, 0.6}};
    nt3.total_power = 1.0;
    const std::string ch3 = fs::absolute(path_of("ch_nt3_bin.json")).string();
    write_channel_file(ch3, nt3);
    CHECK(run_cli("oracle " + ch3 + " --grid 4") == kExitGuardViolation);

    const std::string ch = fs::absolute(basic_channel_path()).string();
    const std::string out_csv = fs::absolute(path_of("region_bin.csv")).string();
    CHECK(run_cli("region " + ch + " --serial --out " + out_csv) == 0);
    CHECK(fs::exists(out_csv));
    CHECK(fs::exists(out_csv + ".hull.csv"));
}
