// Times the serial and parallel execution policies on the same workloads
// and reports the speedup. Absolute numbers are machine-local.

#include <chrono>
#include <cstdio>

#include "secreg/oracle.hpp"
#include "secreg/rng.hpp"
#include "secreg/sweep.hpp"

namespace {

using secreg::ChannelPair;
using secreg::ExecPolicy;
using secreg::Matrix;

Matrix random_channel(secreg::Rng& rng, int rows, int cols) {
    Matrix h(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) h(r, c) = rng.uniform01();
    return h;
}

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main() {
    secreg::Rng rng(7);
    const ChannelPair channels(random_channel(rng, 2, 2), random_channel(rng, 2, 2));

    std::printf("%-28s %12s %12s %9s\n", "workload", "serial ms", "parallel ms", "speedup");

    {
        secreg::SweepConfig config;
        config.total_power = 10.0;
        config.sigma = 0.1;
        config.exec = ExecPolicy::serial;
        const double serial = time_ms([&] { (void)secreg::sweep(channels, config); });
        config.exec = ExecPolicy::parallel;
        const double parallel = time_ms([&] { (void)secreg::sweep(channels, config); });
        std::printf("%-28s %12.1f %12.1f %8.2fx\n", "alpha sweep (nt=2, 22 pts)", serial, parallel,
                    serial / parallel);
    }

    {
        secreg::GridSpec grid;
        grid.exec = ExecPolicy::serial;
        const double serial = time_ms([&] { (void)secreg::grid_oracle_region(channels, 10.0, grid); });
        grid.exec = ExecPolicy::parallel;
        const double parallel = time_ms([&] { (void)secreg::grid_oracle_region(channels, 10.0, grid); });
        std::printf("%-28s %12.1f %12.1f %8.2fx\n", "grid region oracle (nt=2)", serial, parallel,
                    serial / parallel);
    }

    {
        secreg::GridSpec grid;
        grid.angle_steps = 48;
        grid.power_steps = 48;
        grid.exec = ExecPolicy::serial;
        const double serial =
            time_ms([&] { (void)secreg::grid_oracle_wiretap(channels.h1, channels.h2, 10.0, grid); });
        grid.exec = ExecPolicy::parallel;
        const double parallel =
            time_ms([&] { (void)secreg::grid_oracle_wiretap(channels.h1, channels.h2, 10.0, grid); });
        std::printf("%-28s %12.1f %12.1f %8.2fx\n", "wiretap oracle (dense grid)", serial, parallel,
                    serial / parallel);
    }
    return 0;
}
