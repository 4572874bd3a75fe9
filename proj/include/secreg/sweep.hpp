#pragma once

#include <vector>

#include "secreg/precoder.hpp"
#include "secreg/rates.hpp"
#include "secreg/region.hpp"

namespace secreg {

enum class ExecPolicy { serial, parallel };

struct SweepConfig {
    double total_power = 0.0;
    double sigma = 0.05;  // alpha step
    bool order12 = true;
    bool order21 = true;
    SolveOptions solve_opts;
    ExecPolicy exec = ExecPolicy::parallel;
};

/// One solved (alpha, order) task: the achievable point plus the covariances
/// that realize it. q1/q2 always refer to user 1 and user 2 respectively.
struct SweepPoint {
    RatePoint point;
    CovarianceMatrix q1;
    CovarianceMatrix q2;
};

struct SweepResult {
    std::vector<SweepPoint> points;  // alpha ascending, user-1-first before user-2-first
    RateRegion region;
};

/// {0, sigma, 2*sigma, ...} capped below 1, with 1 always appended.
std::vector<double> alpha_grid(double sigma);

/// User 1 precoded first: solve user 1's wiretap problem at power alpha*P,
/// whiten both channels by that covariance, then solve user 2's problem at
/// (1-alpha)*P on the whitened pair.
SweepPoint solve_order12(const ChannelPair& channels, double total_power, double alpha,
                         const SolveOptions& opts);

/// User 2 precoded first with power (1-alpha)*P; user 1 then solves at
/// alpha*P on channels whitened by user 2's covariance. alpha keeps its
/// meaning as user 1's power share.
SweepPoint solve_order21(const ChannelPair& channels, double total_power, double alpha,
                         const SolveOptions& opts);

/// Re-evaluates the rate pair of a solved point from its stored covariances,
/// honoring the point's precoding order.
RatePoint recompute_rates(const ChannelPair& channels, const SweepPoint& pt);

/// Runs every enabled (alpha, order) task over the alpha grid and hulls the
/// resulting points. Output is identical under serial and parallel policies.
SweepResult sweep(const ChannelPair& channels, const SweepConfig& config);

} // namespace secreg
