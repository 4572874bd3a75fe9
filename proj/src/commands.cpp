#include "secreg/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "secreg/channel_file.hpp"
#include "secreg/covariance.hpp"
#include "secreg/csv.hpp"
#include "secreg/oracle.hpp"
#include "secreg/rates.hpp"
#include "secreg/rng.hpp"

namespace secreg {

namespace {

void write_hull_csv(std::ostream& out, const RateRegion& region) {
    out << "R1_bits,R2_bits\n";
    for (const auto& v : region.hull_vertices)
        out << format_double(v.r1_bits) << ',' << format_double(v.r2_bits) << '\n';
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    return out;
}

} // namespace

int cmd_rate(const std::string& channel_path, const std::string& q1_path, const std::string& q2_path,
             std::ostream& out, std::ostream& err) {
    try {
        const ChannelFile file = read_channel_file(channel_path);
        const ChannelPair channels(file.h1, file.h2);
        const Matrix q1_raw = read_q_file(q1_path);
        const Matrix q2_raw = read_q_file(q2_path);
        for (const auto* q : {&q1_raw, &q2_raw})
            if (q->rows() != channels.nt() || q->cols() != channels.nt())
                throw std::invalid_argument("covariance dimensions must match the transmit antenna count");
        const CovarianceMatrix q1 = CovarianceMatrix::from_matrix(q1_raw);
        const CovarianceMatrix q2 = CovarianceMatrix::from_matrix(q2_raw);
        const RatePoint r = rate_pair(channels, q1, q2);
        char line[64];
        std::snprintf(line, sizeof(line), "R1=%.6f R2=%.6f", r.r1_bits, r.r2_bits);
        out << line << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int cmd_region(const std::string& channel_path, const std::string& orders, const std::string& out_path,
               ExecPolicy exec, std::ostream& out, std::ostream& err) {
    try {
        const ChannelFile file = read_channel_file(channel_path);
        const ChannelPair channels(file.h1, file.h2);

        SweepConfig config;
        config.total_power = file.total_power;
        config.sigma = file.sigma;
        config.solve_opts.seed = file.seed;
        config.exec = exec;
        if (orders == "both") {
            config.order12 = true;
            config.order21 = true;
        } else if (orders == "12") {
            config.order12 = true;
            config.order21 = false;
        } else if (orders == "21") {
            config.order12 = false;
            config.order21 = true;
        } else {
            throw std::invalid_argument("orders must be one of: both, 12, 21");
        }

        const SweepResult result = sweep(channels, config);

        auto rows = open_output(out_path);
        rows << "alpha,order,R1_bits,R2_bits\n";
        for (const auto& p : result.points) {
            rows << format_double(p.point.alpha) << ','
                 << (p.point.order == PrecodingOrder::user1_first ? "12" : "21") << ','
                 << format_double(p.point.r1_bits) << ',' << format_double(p.point.r2_bits) << '\n';
        }
        const std::string hull_path = out_path + ".hull.csv";
        auto hull = open_output(hull_path);
        write_hull_csv(hull, result.region);

        out << "wrote " << result.points.size() << " points to " << out_path << " and "
            << result.region.hull_vertices.size() << " hull vertices to " << hull_path << '\n';
        return kExitOk;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuardViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int cmd_oracle(const std::string& channel_path, int grid_steps, const std::string& out_path,
               ExecPolicy exec, std::ostream& out, std::ostream& err) {
    try {
        const ChannelFile file = read_channel_file(channel_path);
        const ChannelPair channels(file.h1, file.h2);
        GridSpec grid;
        grid.angle_steps = grid_steps;
        grid.power_steps = grid_steps;
        grid.exec = exec;
        const RateRegion region = grid_oracle_region(channels, file.total_power, grid);
        auto hull = open_output(out_path);
        write_hull_csv(hull, region);
        out << "wrote " << region.hull_vertices.size() << " hull vertices to " << out_path << '\n';
        return kExitOk;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuardViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.nt < 1 || config.n1_max < 1 || config.n2_max < 1)
            throw std::invalid_argument("bench dimensions must be >= 1");
        if (config.trials < 1) throw std::invalid_argument("bench trials must be >= 1");
        if (!(config.power >= 0.0)) throw std::invalid_argument("bench power must be nonnegative");

        std::vector<std::vector<double>> mean_ms(static_cast<std::size_t>(config.n1_max),
                                                 std::vector<double>(static_cast<std::size_t>(config.n2_max), 0.0));
        for (int n1 = 1; n1 <= config.n1_max; ++n1) {
            for (int n2 = 1; n2 <= config.n2_max; ++n2) {
                double total_ms = 0.0;
                for (int trial = 0; trial < config.trials; ++trial) {
                    const std::uint64_t cell =
                        (static_cast<std::uint64_t>(n1) << 32) | (static_cast<std::uint64_t>(n2) << 16) |
                        static_cast<std::uint64_t>(trial);
                    Rng rng(mix_seed(config.seed, cell));
                    Matrix h1(n1, config.nt);
                    Matrix h2(n2, config.nt);
                    for (int r = 0; r < n1; ++r)
                        for (int c = 0; c < config.nt; ++c) h1(r, c) = rng.uniform01();
                    for (int r = 0; r < n2; ++r)
                        for (int c = 0; c < config.nt; ++c) h2(r, c) = rng.uniform01();
                    const ChannelPair channels(h1, h2);

                    SweepConfig sweep_config;
                    sweep_config.total_power = config.power;
                    sweep_config.sigma = config.sigma;
                    sweep_config.solve_opts.seed = mix_seed(config.seed, cell ^ 0x5eedULL);
                    sweep_config.exec = config.exec;

                    const auto start = std::chrono::steady_clock::now();
                    (void)sweep(channels, sweep_config);
                    const auto stop = std::chrono::steady_clock::now();
                    total_ms += std::chrono::duration<double, std::milli>(stop - start).count();
                }
                mean_ms[static_cast<std::size_t>(n1 - 1)][static_cast<std::size_t>(n2 - 1)] =
                    total_ms / config.trials;
            }
        }

        out << "mean sweep wall time (ms), " << config.trials << " trial(s) per cell, nt=" << config.nt
            << ", P=" << format_double(config.power) << '\n';
        out << std::setw(8) << "n1\\n2";
        for (int n2 = 1; n2 <= config.n2_max; ++n2) out << std::setw(12) << n2;
        out << '\n';
        out << std::fixed << std::setprecision(1);
        for (int n1 = 1; n1 <= config.n1_max; ++n1) {
            out << std::setw(8) << n1;
            for (int n2 = 1; n2 <= config.n2_max; ++n2)
                out << std::setw(12) << mean_ms[static_cast<std::size_t>(n1 - 1)][static_cast<std::size_t>(n2 - 1)];
            out << '\n';
        }
        out.unsetf(std::ios::fixed);
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace secreg
