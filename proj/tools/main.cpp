#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "secreg/commands.hpp"
#include "secreg/oracle.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Achievable secrecy rate regions for the two-user MIMO downlink"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags remain valid after a subcommand name

    int rc = secreg::kExitOk;
    bool serial = false;
    app.add_flag("--serial", serial, "disable parallel execution");
    auto exec = [&] { return serial ? secreg::ExecPolicy::serial : secreg::ExecPolicy::parallel; };

    std::string channel_path;
    std::string q1_path;
    std::string q2_path;
    auto* rate = app.add_subcommand("rate", "evaluate the rate pair for explicit covariance files");
    rate->add_option("channel", channel_path, "channel file (JSON)")->required();
    rate->add_option("--q1", q1_path, "user 1 covariance file")->required();
    rate->add_option("--q2", q2_path, "user 2 covariance file")->required();
    rate->callback([&] { rc = secreg::cmd_rate(channel_path, q1_path, q2_path, std::cout, std::cerr); });

    std::string region_channel;
    std::string orders = "both";
    std::string region_out = "region.csv";
    auto* region = app.add_subcommand("region", "sweep the power split and write the achievable region");
    region->add_option("channel", region_channel, "channel file (JSON)")->required();
    region->add_option("--orders", orders, "precoding orders: both, 12 or 21");
    region->add_option("--out", region_out, "output CSV path (hull goes to <out>.hull.csv)");
    region->callback(
        [&] { rc = secreg::cmd_region(region_channel, orders, region_out, exec(), std::cout, std::cerr); });

    std::string oracle_channel;
    int grid_steps = 12;
    std::string oracle_out = "oracle.csv";
    auto* oracle = app.add_subcommand("oracle", "brute-force grid reference region");
    oracle->add_option("channel", oracle_channel, "channel file (JSON)")->required();
    oracle->add_option("--grid", grid_steps, "steps per angle and per power axis");
    oracle->add_option("--out", oracle_out, "output CSV path");
    oracle->callback(
        [&] { rc = secreg::cmd_oracle(oracle_channel, grid_steps, oracle_out, exec(), std::cout, std::cerr); });

    secreg::BenchConfig bench_config;
    auto* bench = app.add_subcommand("bench", "time full sweeps over seeded random channels");
    bench->add_option("--nt", bench_config.nt, "transmit antennas");
    bench->add_option("--n1-max", bench_config.n1_max, "max receive antennas, user 1");
    bench->add_option("--n2-max", bench_config.n2_max, "max receive antennas, user 2");
    bench->add_option("--power", bench_config.power, "total power budget");
    bench->add_option("--trials", bench_config.trials, "channels per cell");
    bench->add_option("--sigma", bench_config.sigma, "alpha step for each sweep");
    bench->add_option("--seed", bench_config.seed, "base seed");
    bench->callback([&] {
        bench_config.exec = exec();
        rc = secreg::cmd_bench(bench_config, std::cout, std::cerr);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? secreg::kExitOk : secreg::kExitInputError;
    } catch (const secreg::GuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return secreg::kExitGuardViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return secreg::kExitInputError;
    }
    return rc;
}
