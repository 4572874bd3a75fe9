#include "secreg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <vector>

namespace secreg {

namespace {

constexpr double kGridCap = 1e7;

std::vector<double> angle_values(int steps) {
    if (steps < 1) throw std::invalid_argument("grid: angle_steps must be >= 1");
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(steps));
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    if (steps == 1) {
        v.push_back(0.0);
        return v;
    }
    for (int i = 0; i < steps; ++i)
        v.push_back(-kHalfPi + static_cast<double>(i) * std::numbers::pi / (steps - 1));
    return v;
}

/// All angle tuples of length count, flattened; the odometer runs the last
/// coordinate fastest.
std::vector<double> angle_tuples(int count, const std::vector<double>& values, std::size_t& tuples_out) {
    std::size_t total = 1;
    for (int i = 0; i < count; ++i) {
        if (static_cast<double>(total) * values.size() > kGridCap)
            throw GuardError("grid: angle enumeration exceeds the size cap");
        total *= values.size();
    }
    tuples_out = total;
    std::vector<double> flat(total * static_cast<std::size_t>(count));
    std::vector<int> digits(static_cast<std::size_t>(count), 0);
    for (std::size_t t = 0; t < total; ++t) {
        for (int i = 0; i < count; ++i)
            flat[t * count + static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])];
        for (int i = count - 1; i >= 0; --i) {
            if (++digits[static_cast<std::size_t>(i)] < static_cast<int>(values.size())) break;
            digits[static_cast<std::size_t>(i)] = 0;
        }
    }
    return flat;
}

/// All nonnegative integer tuples of length dim with sum <= cap, flattened.
std::vector<int> simplex_tuples(int dim, int cap, std::size_t& tuples_out) {
    std::vector<int> flat;
    std::vector<int> current(static_cast<std::size_t>(dim), 0);
    std::size_t count = 0;
    auto recurse = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == dim) {
            flat.insert(flat.end(), current.begin(), current.end());
            ++count;
            if (static_cast<double>(count) > kGridCap)
                throw GuardError("grid: power enumeration exceeds the size cap");
            return;
        }
        for (int m = 0; m <= remaining; ++m) {
            current[static_cast<std::size_t>(pos)] = m;
            self(self, pos + 1, remaining - m);
        }
    };
    recurse(recurse, 0, cap);
    tuples_out = count;
    return flat;
}

PrecoderParams params_at(const std::vector<double>& angle_flat, std::size_t angle_idx, int na,
                         const std::vector<int>& simplex_flat, std::size_t simplex_idx, int nt,
                         double budget, int power_steps) {
    PrecoderParams p;
    p.budget = budget;
    p.angles.assign(angle_flat.begin() + static_cast<std::ptrdiff_t>(angle_idx * na),
                    angle_flat.begin() + static_cast<std::ptrdiff_t>((angle_idx + 1) * na));
    p.lambdas.resize(static_cast<std::size_t>(nt));
    for (int k = 0; k < nt; ++k) {
        const int m = simplex_flat[simplex_idx * static_cast<std::size_t>(nt) + static_cast<std::size_t>(k)];
        p.lambdas[static_cast<std::size_t>(k)] = static_cast<double>(m) * budget / power_steps;
    }
    return p;
}

void check_grid(const GridSpec& grid) {
    if (grid.angle_steps < 1 || grid.power_steps < 1)
        throw std::invalid_argument("grid: step counts must be >= 1");
}

} // namespace

double grid_oracle_wiretap(const Matrix& hb, const Matrix& he, double budget, const GridSpec& grid) {
    if (hb.cols() != he.cols())
        throw std::invalid_argument("grid_oracle_wiretap: channels must share transmit dimension");
    if (!(budget >= 0.0)) throw std::invalid_argument("grid_oracle_wiretap: negative budget");
    check_grid(grid);
    const int nt = hb.cols();
    if (nt > grid.max_dim) throw GuardError("grid_oracle_wiretap: transmit dimension exceeds max_dim");
    if (budget == 0.0) return 0.0;

    const int na = PrecoderParams::angle_count(nt);
    const std::vector<double> values = angle_values(grid.angle_steps);
    std::size_t n_angles = 0;
    const std::vector<double> angle_flat = angle_tuples(na, values, n_angles);
    std::size_t n_simplex = 0;
    const std::vector<int> simplex_flat = simplex_tuples(nt, grid.power_steps, n_simplex);
    if (static_cast<double>(n_angles) * static_cast<double>(n_simplex) > kGridCap)
        throw GuardError("grid_oracle_wiretap: grid exceeds the size cap");

    const std::size_t total = n_angles * n_simplex;
    const bool parallel = grid.exec == ExecPolicy::parallel;
    double best = -std::numeric_limits<double>::infinity();
    std::exception_ptr failure;
    const long long count = static_cast<long long>(total);

#pragma omp parallel for schedule(static) reduction(max : best) if (parallel)
    for (long long i = 0; i < count; ++i) {
        try {
            const std::size_t ai = static_cast<std::size_t>(i) / n_simplex;
            const std::size_t si = static_cast<std::size_t>(i) % n_simplex;
            const PrecoderParams p =
                params_at(angle_flat, ai, na, simplex_flat, si, nt, budget, grid.power_steps);
            best = std::max(best, wiretap_rate(hb, he, build_covariance(p)));
        } catch (...) {
#pragma omp critical(secreg_oracle_wiretap_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return std::max(0.0, best);
}

RateRegion grid_oracle_region(const ChannelPair& channels, double total_power, const GridSpec& grid) {
    if (!(total_power >= 0.0)) throw std::invalid_argument("grid_oracle_region: negative power");
    check_grid(grid);
    const int nt = channels.nt();
    if (nt > grid.max_dim) throw GuardError("grid_oracle_region: transmit dimension exceeds max_dim");
    if (total_power == 0.0) return convex_hull_region(std::span<const RegionVertex>{});

    const int na = PrecoderParams::angle_count(nt);
    const std::vector<double> values = angle_values(grid.angle_steps);
    std::size_t n_angles = 0;
    const std::vector<double> angle_flat = angle_tuples(na, values, n_angles);
    // Joint power split: one simplex of dimension 2*nt covers both users'
    // eigenvalues under the shared budget.
    std::size_t n_joint = 0;
    const std::vector<int> joint_flat = simplex_tuples(2 * nt, grid.power_steps, n_joint);
    const double total_d =
        static_cast<double>(n_angles) * static_cast<double>(n_angles) * static_cast<double>(n_joint);
    if (total_d > kGridCap) throw GuardError("grid_oracle_region: grid exceeds the size cap");

    const std::size_t total = n_angles * n_angles * n_joint;
    std::vector<RegionVertex> points(total);
    const bool parallel = grid.exec == ExecPolicy::parallel;
    std::exception_ptr failure;
    const long long count = static_cast<long long>(total);

#pragma omp parallel for schedule(static) if (parallel)
    for (long long i = 0; i < count; ++i) {
        try {
            const std::size_t a1 = static_cast<std::size_t>(i) / (n_angles * n_joint);
            const std::size_t rem = static_cast<std::size_t>(i) % (n_angles * n_joint);
            const std::size_t a2 = rem / n_joint;
            const std::size_t j = rem % n_joint;

            PrecoderParams p1;
            p1.budget = total_power;
            p1.angles.assign(angle_flat.begin() + static_cast<std::ptrdiff_t>(a1 * na),
                             angle_flat.begin() + static_cast<std::ptrdiff_t>((a1 + 1) * na));
            PrecoderParams p2 = p1;
            p2.angles.assign(angle_flat.begin() + static_cast<std::ptrdiff_t>(a2 * na),
                             angle_flat.begin() + static_cast<std::ptrdiff_t>((a2 + 1) * na));
            p1.lambdas.resize(static_cast<std::size_t>(nt));
            p2.lambdas.resize(static_cast<std::size_t>(nt));
            for (int k = 0; k < nt; ++k) {
                const std::size_t base = j * static_cast<std::size_t>(2 * nt);
                p1.lambdas[static_cast<std::size_t>(k)] =
                    static_cast<double>(joint_flat[base + static_cast<std::size_t>(k)]) * total_power /
                    grid.power_steps;
                p2.lambdas[static_cast<std::size_t>(k)] =
                    static_cast<double>(joint_flat[base + static_cast<std::size_t>(nt + k)]) * total_power /
                    grid.power_steps;
            }
            const RatePoint r = rate_pair(channels, build_covariance(p1), build_covariance(p2));
            points[static_cast<std::size_t>(i)] = {r.r1_bits, r.r2_bits};
        } catch (...) {
#pragma omp critical(secreg_oracle_region_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return convex_hull_region(points);
}

RateRegion time_sharing_baseline(const ChannelPair& channels, double total_power, const SolveOptions& opts) {
    if (!(total_power >= 0.0)) throw std::invalid_argument("time_sharing_baseline: negative power");
    const WiretapSolution user1 = optimize_wiretap(channels.h1, channels.h2, total_power, opts);
    const WiretapSolution user2 = optimize_wiretap(channels.h2, channels.h1, total_power, opts);
    const RegionVertex extremes[] = {{user1.rate_bits, 0.0}, {0.0, user2.rate_bits}};
    return convex_hull_region(std::span<const RegionVertex>(extremes));
}

} // namespace secreg
