#include "secreg/rates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "secreg/linalg.hpp"

namespace secreg {

namespace {

constexpr double kHalfOverLn2 = 0.5 / std::numbers::ln2;

void check_channel_dims(const Matrix& h, const CovarianceMatrix& q, const char* who) {
    if (h.cols() != q.dim()) {
        throw std::invalid_argument(std::string(who) + ": channel column count does not match covariance dimension");
    }
}

/// I + H Q H^T, the receive covariance seen through channel H. Raw loops:
/// this sits on the optimizer's innermost path.
Matrix receive_gram(const Matrix& h, const Matrix& q) {
    const int m = h.rows();
    const int n = h.cols();
    Matrix t(m, n);
    for (int i = 0; i < m; ++i) {
        for (int l = 0; l < n; ++l) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += h(i, k) * q(k, l);
            t(i, l) = s;
        }
    }
    Matrix g(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            double s = 0.0;
            for (int l = 0; l < n; ++l) s += t(i, l) * h(j, l);
            g(i, j) = s;
        }
        g(i, i) += 1.0;
    }
    return g;
}

} // namespace

ChannelPair::ChannelPair(Matrix h1_in, Matrix h2_in) : h1(std::move(h1_in)), h2(std::move(h2_in)) {
    if (h1.cols() != h2.cols()) {
        throw std::invalid_argument("ChannelPair: h1 and h2 must share the transmit antenna count");
    }
    if (!h1.all_finite() || !h2.all_finite()) {
        throw std::invalid_argument("ChannelPair: channel entries must be finite");
    }
}

double wiretap_rate(const Matrix& hb, const Matrix& he, const CovarianceMatrix& q) {
    check_channel_dims(hb, q, "wiretap_rate(hb)");
    check_channel_dims(he, q, "wiretap_rate(he)");
    const double nats = logdet_spd(receive_gram(hb, q.matrix())) - logdet_spd(receive_gram(he, q.matrix()));
    return kHalfOverLn2 * nats;
}

double r2_direct(const ChannelPair& ch, const CovarianceMatrix& q1, const CovarianceMatrix& q2) {
    check_channel_dims(ch.h1, q1, "r2_direct(q1)");
    check_channel_dims(ch.h1, q2, "r2_direct(q2)");
    const Matrix qsum = q1.matrix() + q2.matrix();
    const double user2 = logdet_spd(receive_gram(ch.h2, qsum)) - logdet_spd(receive_gram(ch.h2, q1.matrix()));
    const double user1 = logdet_spd(receive_gram(ch.h1, qsum)) - logdet_spd(receive_gram(ch.h1, q1.matrix()));
    return kHalfOverLn2 * (user2 - user1);
}

EffectiveChannels effective_channels(const ChannelPair& ch, const CovarianceMatrix& q1) {
    check_channel_dims(ch.h1, q1, "effective_channels");

    const auto whiten = [](const Matrix& h, const Matrix& q) {
        const SymEigResult eig = sym_eig(receive_gram(h, q));
        // rows of V^T H scaled by 1/sqrt(eigenvalue); Sigma >= I so all
        // eigenvalues are >= 1 for any PSD q
        Matrix w = eig.eigenvectors.transposed() * h;
        for (int i = 0; i < w.rows(); ++i) {
            const double inv_sqrt = 1.0 / std::sqrt(eig.eigenvalues[i]);
            for (int j = 0; j < w.cols(); ++j) w(i, j) *= inv_sqrt;
        }
        return w;
    };

    return EffectiveChannels{whiten(ch.h1, q1.matrix()), whiten(ch.h2, q1.matrix()), q1};
}

RatePoint rate_pair(const ChannelPair& ch, const CovarianceMatrix& q1, const CovarianceMatrix& q2,
                    std::optional<double> power_budget) {
    if (power_budget && q1.trace() + q2.trace() > *power_budget + 1e-9) {
        throw std::invalid_argument("rate_pair: covariance traces exceed the power budget");
    }
    RatePoint p;
    p.r1_bits = std::max(0.0, wiretap_rate(ch.h1, ch.h2, q1));
    p.r2_bits = std::max(0.0, r2_direct(ch, q1, q2));
    return p;
}

} // namespace secreg
