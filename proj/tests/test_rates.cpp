#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "secreg/covariance.hpp"
#include "secreg/rates.hpp"
#include "secreg/rng.hpp"

using namespace secreg;

namespace {

Matrix random_matrix(Rng& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = rng.uniform(-1.0, 1.0);
    return m;
}

/// Random PSD covariance with the requested trace.
CovarianceMatrix random_covariance(Rng& rng, int nt, double trace) {
    const Matrix b = random_matrix(rng, nt, nt);
    Matrix q = b * b.transposed();
    double t = q.trace();
    if (t <= 0.0) return CovarianceMatrix::zero(nt);
    return CovarianceMatrix::assume_psd(q * (trace / t));
}

double det2(const Matrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

/// det(I + H Q H^T) for n1 <= 2 receive antennas, via explicit 2x2 or scalar
/// determinants; independent of the library's factorization-based route.
double det_i_plus_hqh(const Matrix& h, const Matrix& q) {
    Matrix g = h * q * h.transposed();
    for (int i = 0; i < g.rows(); ++i) g(i, i) += 1.0;
    if (g.rows() == 1) return g(0, 0);
    REQUIRE(g.rows() == 2);
    return det2(g);
}

} // namespace

TEST_CASE("channel pair validates the shared transmit dimension") {
    CHECK_THROWS_AS(ChannelPair(Matrix(2, 3), Matrix(1, 2)), std::invalid_argument);
    const ChannelPair ch(Matrix{{1.0, 2.0}, {3.0, 4.0}}, Matrix{{5.0, 6.0}});
    CHECK(ch.nt() == 2);
    CHECK(ch.n1() == 2);
    CHECK(ch.n2() == 1);
    const ChannelPair sw = ch.swapped();
    CHECK(sw.h1.max_abs_diff(ch.h2) == 0.0);
    CHECK(sw.h2.max_abs_diff(ch.h1) == 0.0);
}

TEST_CASE("scalar wiretap rate matches the closed form") {
    const Matrix hb{{1.0}};
    const Matrix he{{0.5}};
    const CovarianceMatrix q = CovarianceMatrix::from_matrix(Matrix{{4.0}});
    const double rate = wiretap_rate(hb, he, q);
    // 0.5 log2((1 + 1*4) / (1 + 0.25*4)) = 0.5 log2(5/2)
    CHECK(std::abs(rate - 0.5 * std::log2(5.0 / 2.0)) < 1e-13);
    CHECK(std::abs(rate - 0.6609640474436812) < 1e-12);

    // stronger eavesdropper: the unclamped rate goes negative
    CHECK(wiretap_rate(he, hb, q) == doctest::Approx(-rate).epsilon(1e-13));
    CHECK(wiretap_rate(hb, he, CovarianceMatrix::zero(1)) == 0.0);
}

TEST_CASE("wiretap rate agrees with explicit small determinants") {
    Rng rng(23);
    for (int rep = 0; rep < 25; ++rep) {
        const Matrix hb = random_matrix(rng, 2, 2);
        const Matrix he = random_matrix(rng, 1, 2);
        const CovarianceMatrix q = random_covariance(rng, 2, rng.uniform(0.5, 6.0));
        const double expected =
            0.5 * std::log2(det_i_plus_hqh(hb, q.matrix())) - 0.5 * std::log2(det_i_plus_hqh(he, q.matrix()));
        CHECK(std::abs(wiretap_rate(hb, he, q) - expected) < 1e-11);
    }
}

TEST_CASE("wiretap rate rejects mismatched covariance dimensions") {
    const CovarianceMatrix q3 = CovarianceMatrix::zero(3);
    CHECK_THROWS_AS(wiretap_rate(Matrix(1, 2), Matrix(1, 2), q3), std::invalid_argument);
}

TEST_CASE("interference-laden user-2 rate agrees with explicit determinants") {
    const ChannelPair ch(Matrix{{0.8, 0.6}, {0.7, 0.1}}, Matrix{{0.2, 0.6}, {0.9, 0.8}});
    Rng rng(29);
    for (int rep = 0; rep < 25; ++rep) {
        const CovarianceMatrix q1 = random_covariance(rng, 2, rng.uniform(0.2, 3.0));
        const CovarianceMatrix q2 = random_covariance(rng, 2, rng.uniform(0.2, 3.0));
        const Matrix qsum = q1.matrix() + q2.matrix();
        const double expected =
            0.5 * (std::log2(det_i_plus_hqh(ch.h2, qsum)) - std::log2(det_i_plus_hqh(ch.h2, q1.matrix()))) -
            0.5 * (std::log2(det_i_plus_hqh(ch.h1, qsum)) - std::log2(det_i_plus_hqh(ch.h1, q1.matrix())));
        CHECK(std::abs(r2_direct(ch, q1, q2) - expected) < 1e-11);
    }
}

TEST_CASE("user-2 rate without interference reduces to the plain wiretap rate") {
    const ChannelPair ch(Matrix{{0.8, 0.6}, {0.7, 0.1}}, Matrix{{0.2, 0.6}, {0.9, 0.8}});
    Rng rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        const CovarianceMatrix q2 = random_covariance(rng, 2, rng.uniform(0.2, 4.0));
        // q1 = 0 makes the interference terms vanish identically
        CHECK(r2_direct(ch, CovarianceMatrix::zero(2), q2) == wiretap_rate(ch.h2, ch.h1, q2));
    }
}

TEST_CASE("whitening with a zero covariance returns the channels unchanged") {
    const ChannelPair ch(Matrix{{0.8, 0.6}, {0.7, 0.1}}, Matrix{{0.2, 0.6}});
    const EffectiveChannels eff = effective_channels(ch, CovarianceMatrix::zero(2));
    CHECK(eff.h1prime.max_abs_diff(ch.h1) == 0.0);
    CHECK(eff.h2prime.max_abs_diff(ch.h2) == 0.0);
    CHECK(eff.source_q1.trace() == 0.0);
}

TEST_CASE("whitened channels reproduce the interference-laden rate") {
    // The cascade evaluates user 2's rate as a standard wiretap rate over
    // channels whitened by user 1's covariance; the two routes must agree
    // to near machine precision across random dimensions.
    Rng rng(37);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const int nt = 1 + static_cast<int>(rng.uniform01() * 4.0);
        const int n1 = 1 + static_cast<int>(rng.uniform01() * 4.0);
        const int n2 = 1 + static_cast<int>(rng.uniform01() * 4.0);
        const ChannelPair ch(random_matrix(rng, n1, nt), random_matrix(rng, n2, nt));
        const CovarianceMatrix q1 = random_covariance(rng, nt, rng.uniform(0.1, 5.0));
        const CovarianceMatrix q2 = random_covariance(rng, nt, rng.uniform(0.1, 5.0));
        const EffectiveChannels eff = effective_channels(ch, q1);
        const double direct = r2_direct(ch, q1, q2);
        const double whitened = wiretap_rate(eff.h2prime, eff.h1prime, q2);
        worst = std::max(worst, std::abs(direct - whitened));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("rate pair clamps negatives and enforces the power budget") {
    const ChannelPair ch(Matrix{{0.5}}, Matrix{{1.0}});
    const CovarianceMatrix q1 = CovarianceMatrix::from_matrix(Matrix{{4.0}});
    const CovarianceMatrix q2 = CovarianceMatrix::zero(1);

    const RatePoint p = rate_pair(ch, q1, q2);
    CHECK(p.r1_bits == 0.0); // user 2 hears user 1's signal better; clamped
    CHECK(p.r2_bits == 0.0);
    CHECK(p.alpha == 0.0);
    CHECK(p.order == PrecodingOrder::user1_first);

    CHECK_NOTHROW(rate_pair(ch, q1, q2, 4.0));
    CHECK_THROWS_AS(rate_pair(ch, q1, q2, 3.9), std::invalid_argument);

    // the strong-user direction is positive and unclamped
    const ChannelPair good(Matrix{{1.0}}, Matrix{{0.5}});
    const RatePoint g = rate_pair(good, q1, q2);
    CHECK(g.r1_bits == doctest::Approx(0.6609640474436812).epsilon(1e-12));
}
