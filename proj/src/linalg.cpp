#include "secreg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace secreg {

Matrix givens(int n, int i, int j, double theta) {
    if (i < 0 || j >= n) throw std::invalid_argument("givens: index out of range");
    if (i >= j) throw std::invalid_argument("givens: requires i < j");
    Matrix g = Matrix::identity(n);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    g(i, i) = c;
    g(i, j) = -s;
    g(j, i) = s;
    g(j, j) = c;
    return g;
}

Matrix rotation_from_angles(int n, std::span<const double> angles) {
    if (n < 1) throw std::invalid_argument("rotation_from_angles: n must be >= 1");
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (angles.size() != expected) {
        throw std::invalid_argument("rotation_from_angles: expected " + std::to_string(expected) +
                                    " angles, got " + std::to_string(angles.size()));
    }
    Matrix v = Matrix::identity(n);
    // Right-multiplying by G(i,j,t) mixes columns i and j in place.
    std::size_t a = 0;
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j, ++a) {
            const double c = std::cos(angles[a]);
            const double s = std::sin(angles[a]);
            for (int r = 0; r < n; ++r) {
                const double vi = v(r, i);
                const double vj = v(r, j);
                v(r, i) = c * vi + s * vj;
                v(r, j) = -s * vi + c * vj;
            }
        }
    }
    return v;
}

namespace {

Matrix symmetrized(const Matrix& s) {
    Matrix a(s.rows(), s.cols());
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) a(i, j) = 0.5 * (s(i, j) + s(j, i));
    return a;
}

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

} // namespace

SymEigResult sym_eig(const Matrix& s) {
    if (!s.is_square()) throw std::invalid_argument("sym_eig: matrix not square");
    const int n = s.rows();
    Matrix a = symmetrized(s);
    Matrix v = Matrix::identity(n);

    const double scale = std::max(1.0, a.frobenius_norm());
    constexpr int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > 1e-15 * scale; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;
                // A <- J^T A J with J the (p,q) rotation
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

    SymEigResult out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (int c = 0; c < n; ++c) {
        out.eigenvalues[c] = a(order[c], order[c]);
        for (int r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
    }
    return out;
}

double logdet_spd(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("logdet_spd: matrix not square");
    const int n = m.rows();
    constexpr int kStackDim = 16;
    double stack[kStackDim * kStackDim];
    std::vector<double> heap;
    double* a = stack;
    if (n > kStackDim) {
        heap.resize(static_cast<std::size_t>(n) * n);
        a = heap.data();
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) a[i * n + j] = 0.5 * (m(i, j) + m(j, i));

    // In-place lower Cholesky; log det = sum of log of the squared pivots.
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        double d = a[k * n + k];
        for (int j = 0; j < k; ++j) d -= a[k * n + j] * a[k * n + j];
        if (!(d > 0.0)) throw std::domain_error("logdet_spd: matrix not positive definite");
        const double l = std::sqrt(d);
        a[k * n + k] = l;
        sum += std::log(d);
        for (int i = k + 1; i < n; ++i) {
            double s = a[i * n + k];
            for (int j = 0; j < k; ++j) s -= a[i * n + j] * a[k * n + j];
            a[i * n + k] = s / l;
        }
    }
    return sum;
}

double logdet_psd(const Matrix& m) {
    const SymEigResult eig = sym_eig(m);
    double sum = 0.0;
    for (double lam : eig.eigenvalues) {
        if (lam <= 1e-12) throw std::domain_error("logdet_psd: matrix not positive definite");
        sum += std::log(lam);
    }
    return sum;
}

bool is_psd(const Matrix& m, double tol) {
    const SymEigResult eig = sym_eig(m);
    return eig.eigenvalues.back() >= -tol;
}

} // namespace secreg
