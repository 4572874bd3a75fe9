#pragma once

#include <stdexcept>

#include "secreg/precoder.hpp"
#include "secreg/rates.hpp"
#include "secreg/region.hpp"
#include "secreg/sweep.hpp"

namespace secreg {

/// Thrown when a requested enumeration would exceed the grid guards.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    int angle_steps = 12;   // per angle, over [-pi/2, pi/2]
    int power_steps = 12;   // eigenvalue simplex resolution
    int max_dim = 2;        // refuse larger transmit dimensions
    ExecPolicy exec = ExecPolicy::parallel;
};

/// Brute-force maximum of the wiretap secrecy rate over the same
/// (angles, eigenvalues) coordinates the optimizer searches, clamped at
/// zero. Throws GuardError when nt exceeds grid.max_dim or the grid would
/// exceed 1e7 points.
double grid_oracle_wiretap(const Matrix& hb, const Matrix& he, double budget, const GridSpec& grid = {});

/// Brute-force achievable region: enumerates (Q1, Q2) pairs with
/// tr(Q1) + tr(Q2) <= total_power over the joint grid and hulls the clamped
/// rate pairs. Same guards as grid_oracle_wiretap.
RateRegion grid_oracle_region(const ChannelPair& channels, double total_power, const GridSpec& grid = {});

/// Orthogonal time-sharing baseline: the segment between the two
/// full-power single-user points (R1max, 0) and (0, R2max), hulled with
/// the origin.
RateRegion time_sharing_baseline(const ChannelPair& channels, double total_power,
                                 const SolveOptions& opts = {});

} // namespace secreg
