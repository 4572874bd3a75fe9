#pragma once

#include <optional>

#include "secreg/covariance.hpp"
#include "secreg/matrix.hpp"

namespace secreg {

/// Which user's wiretap problem is solved first in the cascade.
enum class PrecodingOrder { user1_first, user2_first };

/// The two downlink channels. h1 is n1 x nt, h2 is n2 x nt; both share
/// the transmit antenna count nt.
struct ChannelPair {
    Matrix h1;
    Matrix h2;

    ChannelPair(Matrix h1_in, Matrix h2_in);

    int nt() const noexcept { return h1.cols(); }
    int n1() const noexcept { return h1.rows(); }
    int n2() const noexcept { return h2.rows(); }

    /// Users relabeled: returns {h2, h1}.
    ChannelPair swapped() const { return ChannelPair(h2, h1); }
};

/// One achievable point, rates clamped at zero, tagged with the power split
/// and the precoding order that produced it.
struct RatePoint {
    double r1_bits = 0.0;
    double r2_bits = 0.0;
    double alpha = 0.0;
    PrecodingOrder order = PrecodingOrder::user1_first;
};

/// Whitened channels that turn user 2's interference-laden problem into a
/// standard wiretap problem, together with the covariance that induced them.
struct EffectiveChannels {
    Matrix h1prime;
    Matrix h2prime;
    CovarianceMatrix source_q1;
};

/// Secrecy rate of the wiretap channel (hb legitimate, he eavesdropper):
/// (1/2) log2 det(I + hb Q hb^T) - (1/2) log2 det(I + he Q he^T).
/// May be negative; no clamping at this layer.
double wiretap_rate(const Matrix& hb, const Matrix& he, const CovarianceMatrix& q);

/// User 2's rate with user 1's covariance as interference, evaluated through
/// differences of log-dets (no explicit inverses). Unclamped, in bits.
double r2_direct(const ChannelPair& ch, const CovarianceMatrix& q1, const CovarianceMatrix& q2);

/// Whitening transform: Sigma_i = I + h_i q1 h_i^T = V L V^T, then
/// h_i' = L^{-1/2} V^T h_i.
EffectiveChannels effective_channels(const ChannelPair& ch, const CovarianceMatrix& q1);

/// Clamped achievable pair (max(0, R1), max(0, R2)) for the user-1-first
/// functionals. If power_budget is given, tr(q1)+tr(q2) <= budget + 1e-9 is
/// enforced. alpha/order tags are left at their defaults for the caller.
RatePoint rate_pair(const ChannelPair& ch, const CovarianceMatrix& q1, const CovarianceMatrix& q2,
                    std::optional<double> power_budget = std::nullopt);

} // namespace secreg
