#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "secreg/covariance.hpp"
#include "secreg/matrix.hpp"

namespace secreg {

/// Rotation angles plus power-allocation eigenvalues for one covariance,
/// Q = V(angles) diag(lambdas) V(angles)^T with sum(lambdas) <= budget.
struct PrecoderParams {
    std::vector<double> angles;   // nt(nt-1)/2, lexicographic (i,j)
    std::vector<double> lambdas;  // nt, each >= 0
    double budget = 0.0;

    int nt() const noexcept { return static_cast<int>(lambdas.size()); }

    static int angle_count(int nt) noexcept { return nt * (nt - 1) / 2; }
    static int param_count(int nt) noexcept { return nt * (nt + 1) / 2; }

    /// Flat layout [angles..., lambdas...] used by the optimizer.
    std::vector<double> pack() const;
    static PrecoderParams unpack(std::span<const double> x, int nt, double budget);
};

struct SolveOptions {
    int restarts = 5;
    double barrier_mu0 = 1.0;
    double barrier_shrink = 0.1;
    double barrier_min_mu = 1e-6;
    double grad_tol = 1e-8;
    int max_iters = 500;  // per inner BFGS solve
    double fd_step = 1e-6;
    std::uint64_t seed = 0;
};

struct WiretapSolution {
    CovarianceMatrix q;
    double rate_bits = 0.0;  // clamped at zero
    PrecoderParams params;
    bool converged = false;
    int iterations = 0;
};

struct BfgsResult {
    std::vector<double> x;
    double f = 0.0;
    bool converged = false;
    int iterations = 0;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;
using GradientFn = std::function<std::vector<double>(std::span<const double>)>;

CovarianceMatrix build_covariance(const PrecoderParams& p);

/// -secrecy_rate_bits - mu * (sum_k ln lambda_k + ln(budget - sum lambda)).
/// Throws std::domain_error unless strictly feasible (all lambda > 0,
/// positive slack).
double barrier_objective(const Matrix& hb, const Matrix& he, const PrecoderParams& p, double mu);

/// Central finite differences of barrier_objective over the packed
/// parameters. Steps that would leave the strictly feasible region are
/// halved per coordinate.
std::vector<double> gradient_fd(const Matrix& hb, const Matrix& he, const PrecoderParams& p, double mu,
                                double fd_step = 1e-6);

/// Inverse-Hessian BFGS with Armijo backtracking (factor 0.5, c1 = 1e-4).
/// Stops when the gradient infinity norm falls below opts.grad_tol or after
/// opts.max_iters iterations. A line-search dead end returns the best point
/// seen with converged = false.
BfgsResult bfgs_minimize(const ObjectiveFn& objective, const GradientFn& gradient, std::span<const double> x0,
                         const SolveOptions& opts);

/// Maximizes the wiretap secrecy rate over rotation angles and power
/// allocation under tr(Q) <= budget, via a log-barrier loop around BFGS with
/// multi-start. Deterministic for a fixed seed.
WiretapSolution optimize_wiretap(const Matrix& hb, const Matrix& he, double budget, const SolveOptions& opts = {});

} // namespace secreg
