#include "secreg/sweep.hpp"

#include <exception>
#include <stdexcept>
#include <utility>

namespace secreg {

std::vector<double> alpha_grid(double sigma) {
    if (!(sigma > 0.0) || !(sigma <= 1.0)) throw std::invalid_argument("alpha_grid: sigma must be in (0, 1]");
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double a = k * sigma;
        if (!(a < 1.0 - 1e-12)) break;
        grid.push_back(a);
    }
    grid.push_back(1.0);
    return grid;
}

SweepPoint solve_order12(const ChannelPair& channels, double total_power, double alpha,
                         const SolveOptions& opts) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("solve_order12: alpha must be in [0, 1]");
    if (!(total_power >= 0.0)) throw std::invalid_argument("solve_order12: negative power");
    WiretapSolution user1 = optimize_wiretap(channels.h1, channels.h2, alpha * total_power, opts);
    EffectiveChannels eff = effective_channels(channels, user1.q);
    WiretapSolution user2 =
        optimize_wiretap(eff.h2prime, eff.h1prime, (1.0 - alpha) * total_power, opts);
    SweepPoint out;
    out.point = {user1.rate_bits, user2.rate_bits, alpha, PrecodingOrder::user1_first};
    out.q1 = std::move(user1.q);
    out.q2 = std::move(user2.q);
    return out;
}

SweepPoint solve_order21(const ChannelPair& channels, double total_power, double alpha,
                         const SolveOptions& opts) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("solve_order21: alpha must be in [0, 1]");
    if (!(total_power >= 0.0)) throw std::invalid_argument("solve_order21: negative power");
    WiretapSolution user2 = optimize_wiretap(channels.h2, channels.h1, (1.0 - alpha) * total_power, opts);
    EffectiveChannels eff = effective_channels(channels.swapped(), user2.q);
    // In the swapped pair, h1prime is user 2's whitened channel and h2prime
    // is user 1's.
    WiretapSolution user1 = optimize_wiretap(eff.h2prime, eff.h1prime, alpha * total_power, opts);
    SweepPoint out;
    out.point = {user1.rate_bits, user2.rate_bits, alpha, PrecodingOrder::user2_first};
    out.q1 = std::move(user1.q);
    out.q2 = std::move(user2.q);
    return out;
}

RatePoint recompute_rates(const ChannelPair& channels, const SweepPoint& pt) {
    RatePoint r;
    if (pt.point.order == PrecodingOrder::user1_first) {
        r = rate_pair(channels, pt.q1, pt.q2);
    } else {
        const RatePoint swapped = rate_pair(channels.swapped(), pt.q2, pt.q1);
        r.r1_bits = swapped.r2_bits;
        r.r2_bits = swapped.r1_bits;
    }
    r.alpha = pt.point.alpha;
    r.order = pt.point.order;
    return r;
}

SweepResult sweep(const ChannelPair& channels, const SweepConfig& config) {
    if (!(config.total_power >= 0.0)) throw std::invalid_argument("sweep: negative power");
    const std::vector<double> grid = alpha_grid(config.sigma);

    struct Task {
        double alpha;
        PrecodingOrder order;
    };
    std::vector<Task> tasks;
    tasks.reserve(grid.size() * 2);
    for (double a : grid) {
        if (config.order12) tasks.push_back({a, PrecodingOrder::user1_first});
        if (config.order21) tasks.push_back({a, PrecodingOrder::user2_first});
    }

    SweepResult result;
    result.points.resize(tasks.size());
    std::exception_ptr failure;
    const int n = static_cast<int>(tasks.size());
    const bool parallel = config.exec == ExecPolicy::parallel;

#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (int t = 0; t < n; ++t) {
        try {
            const Task& task = tasks[static_cast<std::size_t>(t)];
            result.points[static_cast<std::size_t>(t)] =
                task.order == PrecodingOrder::user1_first
                    ? solve_order12(channels, config.total_power, task.alpha, config.solve_opts)
                    : solve_order21(channels, config.total_power, task.alpha, config.solve_opts);
        } catch (...) {
#pragma omp critical(secreg_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<RatePoint> rate_points;
    rate_points.reserve(result.points.size());
    for (const auto& p : result.points) rate_points.push_back(p.point);
    result.region = convex_hull_region(rate_points);
    return result;
}

} // namespace secreg
