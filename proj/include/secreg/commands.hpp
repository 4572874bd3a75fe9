#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "secreg/sweep.hpp"

namespace secreg {

/// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitGuardViolation = 3;

struct BenchConfig {
    int nt = 2;
    int n1_max = 5;
    int n2_max = 5;
    double power = 30.0;
    int trials = 3;
    double sigma = 0.05;
    std::uint64_t seed = 0;
    ExecPolicy exec = ExecPolicy::parallel;
};

/// Evaluates the clamped rate pair for explicit covariances and prints
/// "R1=<v> R2=<v>" with six decimals.
int cmd_rate(const std::string& channel_path, const std::string& q1_path, const std::string& q2_path,
             std::ostream& out, std::ostream& err);

/// Runs the alpha sweep and writes <out_path> (rows: alpha,order,R1_bits,
/// R2_bits) plus <out_path>.hull.csv (hull vertices ascending in R1).
/// orders is "both", "12" or "21".
int cmd_region(const std::string& channel_path, const std::string& orders, const std::string& out_path,
               ExecPolicy exec, std::ostream& out, std::ostream& err);

/// Runs the brute-force region oracle at the given grid density and writes
/// its hull in the same format as cmd_region's hull file.
int cmd_oracle(const std::string& channel_path, int grid_steps, const std::string& out_path,
               ExecPolicy exec, std::ostream& out, std::ostream& err);

/// Times full sweeps over seeded random channels for every receive-antenna
/// combination and prints a mean-milliseconds table (n1 rows, n2 columns).
int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);

} // namespace secreg
