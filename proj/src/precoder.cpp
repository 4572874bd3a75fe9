#include "secreg/precoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "secreg/linalg.hpp"
#include "secreg/rates.hpp"
#include "secreg/rng.hpp"

namespace secreg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lambda_sum(const std::vector<double>& lambdas) {
    double s = 0.0;
    for (double l : lambdas) s += l;
    return s;
}

/// Barrier value at a strictly feasible point, +inf outside. The optimizer
/// line search relies on the +inf branch to reject boundary crossings.
double barrier_value(const Matrix& hb, const Matrix& he, const PrecoderParams& p, double mu) {
    double total = 0.0;
    double log_sum = 0.0;
    for (double l : p.lambdas) {
        if (!(l > 0.0)) return kInf;
        total += l;
        log_sum += std::log(l);
    }
    const double slack = p.budget - total;
    if (!(slack > 0.0)) return kInf;
    const double rate = wiretap_rate(hb, he, build_covariance(p));
    const double value = -rate - mu * (log_sum + std::log(slack));
    return std::isfinite(value) ? value : kInf;
}

PrecoderParams unpack_unchecked(std::span<const double> x, int nt, double budget) {
    PrecoderParams p;
    const int na = PrecoderParams::angle_count(nt);
    p.angles.assign(x.begin(), x.begin() + na);
    p.lambdas.assign(x.begin() + na, x.end());
    p.budget = budget;
    return p;
}

} // namespace

std::vector<double> PrecoderParams::pack() const {
    std::vector<double> x;
    x.reserve(angles.size() + lambdas.size());
    x.insert(x.end(), angles.begin(), angles.end());
    x.insert(x.end(), lambdas.begin(), lambdas.end());
    return x;
}

PrecoderParams PrecoderParams::unpack(std::span<const double> x, int nt, double budget) {
    if (nt < 1) throw std::invalid_argument("unpack: nt must be positive");
    if (static_cast<int>(x.size()) != param_count(nt))
        throw std::invalid_argument("unpack: expected nt(nt+1)/2 values");
    return unpack_unchecked(x, nt, budget);
}

CovarianceMatrix build_covariance(const PrecoderParams& p) {
    const int nt = p.nt();
    if (nt < 1) throw std::invalid_argument("build_covariance: empty parameter set");
    if (static_cast<int>(p.angles.size()) != PrecoderParams::angle_count(nt))
        throw std::invalid_argument("build_covariance: angle count mismatch");
    double total = 0.0;
    for (double l : p.lambdas) {
        if (!(l >= -1e-9)) throw std::domain_error("build_covariance: negative eigenvalue");
        total += l;
    }
    if (total > p.budget + 1e-9) throw std::domain_error("build_covariance: power budget exceeded");

    const Matrix v = rotation_from_angles(nt, p.angles);
    Matrix q(nt, nt);
    for (int i = 0; i < nt; ++i) {
        for (int j = i; j < nt; ++j) {
            double s = 0.0;
            for (int k = 0; k < nt; ++k) {
                const double l = std::max(p.lambdas[static_cast<std::size_t>(k)], 0.0);
                if (l != 0.0) s += v(i, k) * l * v(j, k);
            }
            q(i, j) = s;
            q(j, i) = s;
        }
    }
    return CovarianceMatrix::assume_psd(q);
}

double barrier_objective(const Matrix& hb, const Matrix& he, const PrecoderParams& p, double mu) {
    for (double l : p.lambdas)
        if (!(l > 0.0)) throw std::domain_error("barrier_objective: requires every eigenvalue > 0");
    if (!(p.budget - lambda_sum(p.lambdas) > 0.0))
        throw std::domain_error("barrier_objective: requires positive power slack");
    return barrier_value(hb, he, p, mu);
}

std::vector<double> gradient_fd(const Matrix& hb, const Matrix& he, const PrecoderParams& p, double mu,
                                double fd_step) {
    const int nt = p.nt();
    const int na = PrecoderParams::angle_count(nt);
    const int n = PrecoderParams::param_count(nt);
    PrecoderParams probe = p;
    std::vector<double> grad(static_cast<std::size_t>(n), 0.0);

    const double slack = p.budget - lambda_sum(p.lambdas);
    for (int i = 0; i < n; ++i) {
        double& slot = i < na ? probe.angles[static_cast<std::size_t>(i)]
                              : probe.lambdas[static_cast<std::size_t>(i - na)];
        double h = fd_step;
        if (i >= na) {
            // Eigenvalue coordinate: keep both probe points strictly inside
            // lambda > 0 and slack > 0.
            const double room = std::min(slot, slack);
            while (h >= room && h > 1e-300) h *= 0.5;
        }
        const double saved = slot;
        slot = saved + h;
        const double fp = barrier_value(hb, he, probe, mu);
        slot = saved - h;
        const double fm = barrier_value(hb, he, probe, mu);
        slot = saved;
        grad[static_cast<std::size_t>(i)] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

BfgsResult bfgs_minimize(const ObjectiveFn& objective, const GradientFn& gradient, std::span<const double> x0,
                         const SolveOptions& opts) {
    const int n = static_cast<int>(x0.size());
    std::vector<double> x(x0.begin(), x0.end());
    double f = objective(x);
    if (!std::isfinite(f)) throw std::invalid_argument("bfgs_minimize: objective not finite at start");
    std::vector<double> g = gradient(x);

    // Inverse-Hessian approximation, row-major dense.
    std::vector<double> hinv(static_cast<std::size_t>(n) * n, 0.0);
    auto reset_hinv = [&] {
        std::fill(hinv.begin(), hinv.end(), 0.0);
        for (int i = 0; i < n; ++i) hinv[static_cast<std::size_t>(i) * n + i] = 1.0;
    };
    reset_hinv();

    BfgsResult best{x, f, false, 0};
    std::vector<double> d(static_cast<std::size_t>(n));
    std::vector<double> xn(static_cast<std::size_t>(n));

    int iter = 0;
    for (; iter < opts.max_iters; ++iter) {
        double gmax = 0.0;
        for (double v : g) gmax = std::max(gmax, std::abs(v));
        if (gmax <= opts.grad_tol) {
            best.x = x;
            best.f = f;
            best.converged = true;
            best.iterations = iter;
            return best;
        }

        auto direction = [&] {
            double slope = 0.0;
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (int j = 0; j < n; ++j) s += hinv[static_cast<std::size_t>(i) * n + j] * g[static_cast<std::size_t>(j)];
                d[static_cast<std::size_t>(i)] = -s;
                slope += d[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
            }
            return slope;
        };
        double slope = direction();
        if (!(slope < 0.0)) {
            // Curvature estimate broke down; fall back to steepest descent.
            reset_hinv();
            slope = direction();
        }

        double t = 1.0;
        double fn = kInf;
        bool accepted = false;
        for (int back = 0; back < 60; ++back) {
            for (int i = 0; i < n; ++i) xn[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + t * d[static_cast<std::size_t>(i)];
            fn = objective(xn);
            if (std::isfinite(fn) && fn <= f + 1e-4 * t * slope) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            best.x = x;
            best.f = f;
            best.converged = false;
            best.iterations = iter;
            return best;
        }

        std::vector<double> gn = gradient(xn);
        double ys = 0.0;
        double ss = 0.0;
        for (int i = 0; i < n; ++i) {
            const double si = xn[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)];
            const double yi = gn[static_cast<std::size_t>(i)] - g[static_cast<std::size_t>(i)];
            ys += yi * si;
            ss += si * si;
        }
        if (ys > 1e-12 * std::sqrt(ss) + 1e-300) {
            // hinv <- (I - rho s y^T) hinv (I - rho y s^T) + rho s s^T
            const double rho = 1.0 / ys;
            std::vector<double> hy(static_cast<std::size_t>(n), 0.0);
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (int j = 0; j < n; ++j)
                    s += hinv[static_cast<std::size_t>(i) * n + j] *
                         (gn[static_cast<std::size_t>(j)] - g[static_cast<std::size_t>(j)]);
                hy[static_cast<std::size_t>(i)] = s;
            }
            double yhy = 0.0;
            for (int i = 0; i < n; ++i)
                yhy += (gn[static_cast<std::size_t>(i)] - g[static_cast<std::size_t>(i)]) * hy[static_cast<std::size_t>(i)];
            for (int i = 0; i < n; ++i) {
                const double si = xn[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)];
                for (int j = 0; j < n; ++j) {
                    const double sj = xn[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(j)];
                    hinv[static_cast<std::size_t>(i) * n + j] +=
                        -rho * (si * hy[static_cast<std::size_t>(j)] + hy[static_cast<std::size_t>(i)] * sj) +
                        rho * rho * yhy * si * sj + rho * si * sj;
                }
            }
        }

        x = xn;
        f = fn;
        g = std::move(gn);
    }

    best.x = x;
    best.f = f;
    best.converged = false;
    best.iterations = iter;
    return best;
}

WiretapSolution optimize_wiretap(const Matrix& hb, const Matrix& he, double budget, const SolveOptions& opts) {
    if (hb.cols() != he.cols())
        throw std::invalid_argument("optimize_wiretap: channels must share transmit dimension");
    if (!(budget >= 0.0)) throw std::invalid_argument("optimize_wiretap: budget must be nonnegative");
    if (opts.restarts < 1) throw std::invalid_argument("optimize_wiretap: restarts must be >= 1");
    const int nt = hb.cols();

    if (budget == 0.0) {
        WiretapSolution out;
        out.params.angles.assign(static_cast<std::size_t>(PrecoderParams::angle_count(nt)), 0.0);
        out.params.lambdas.assign(static_cast<std::size_t>(nt), 0.0);
        out.params.budget = 0.0;
        out.q = CovarianceMatrix::zero(nt);
        out.rate_bits = 0.0;
        out.converged = true;
        out.iterations = 0;
        return out;
    }

    const int na = PrecoderParams::angle_count(nt);
    Rng rng(opts.seed);

    WiretapSolution best;
    double best_rate = -kInf;
    constexpr double kHalfPi = std::numbers::pi / 2.0;

    for (int restart = 0; restart < opts.restarts; ++restart) {
        PrecoderParams start;
        start.budget = budget;
        if (restart == 0) {
            start.angles.assign(static_cast<std::size_t>(na), 0.0);
            start.lambdas.assign(static_cast<std::size_t>(nt), 0.9 * budget / nt);
        } else {
            start.angles.resize(static_cast<std::size_t>(na));
            for (double& a : start.angles) a = rng.uniform(-kHalfPi, kHalfPi);
            const double total = budget * rng.uniform(0.10, 0.95);
            start.lambdas.resize(static_cast<std::size_t>(nt));
            double gsum = 0.0;
            for (double& l : start.lambdas) {
                l = rng.uniform(0.01, 1.0);
                gsum += l;
            }
            for (double& l : start.lambdas) l = l / gsum * total;
        }

        std::vector<double> x = start.pack();
        bool converged = false;
        int iterations = 0;
        PrecoderParams scratch = start;
        const auto load_scratch = [&](std::span<const double> z) -> const PrecoderParams& {
            scratch.angles.assign(z.begin(), z.begin() + na);
            scratch.lambdas.assign(z.begin() + na, z.end());
            return scratch;
        };
        for (double mu = opts.barrier_mu0; mu >= opts.barrier_min_mu * (1.0 - 1e-9); mu *= opts.barrier_shrink) {
            auto objective = [&, mu](std::span<const double> z) {
                return barrier_value(hb, he, load_scratch(z), mu);
            };
            auto gradient = [&, mu](std::span<const double> z) {
                return gradient_fd(hb, he, load_scratch(z), mu, opts.fd_step);
            };
            BfgsResult r = bfgs_minimize(objective, gradient, x, opts);
            x = std::move(r.x);
            converged = r.converged;
            iterations += r.iterations;
        }

        PrecoderParams p = unpack_unchecked(x, nt, budget);
        CovarianceMatrix q = build_covariance(p);
        const double rate = std::max(0.0, wiretap_rate(hb, he, q));
        if (rate > best_rate) {
            best_rate = rate;
            best.q = std::move(q);
            best.rate_bits = rate;
            best.params = std::move(p);
            best.converged = converged;
            best.iterations = iterations;
        }
    }
    return best;
}

} // namespace secreg
