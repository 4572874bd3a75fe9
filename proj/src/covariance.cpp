#include "secreg/covariance.hpp"

#include <cmath>
#include <stdexcept>

#include "secreg/linalg.hpp"

namespace secreg {

CovarianceMatrix::CovarianceMatrix(Matrix q) : q_(std::move(q)), trace_(q_.trace()) {}

CovarianceMatrix CovarianceMatrix::zero(int nt) { return CovarianceMatrix(Matrix(nt, nt)); }

CovarianceMatrix CovarianceMatrix::from_matrix(Matrix q, double psd_tol) {
    if (!q.is_square()) throw std::domain_error("CovarianceMatrix: matrix not square");
    double asym = 0.0;
    for (int i = 0; i < q.rows(); ++i)
        for (int j = i + 1; j < q.cols(); ++j) asym = std::max(asym, std::abs(q(i, j) - q(j, i)));
    if (asym > 1e-10 * std::max(1.0, q.frobenius_norm())) {
        throw std::domain_error("CovarianceMatrix: matrix not symmetric");
    }
    for (int i = 0; i < q.rows(); ++i)
        for (int j = i + 1; j < q.cols(); ++j) {
            const double v = 0.5 * (q(i, j) + q(j, i));
            q(i, j) = v;
            q(j, i) = v;
        }
    if (!is_psd(q, psd_tol)) throw std::domain_error("CovarianceMatrix: matrix not PSD within tolerance");
    return CovarianceMatrix(std::move(q));
}

CovarianceMatrix CovarianceMatrix::assume_psd(Matrix q) { return CovarianceMatrix(std::move(q)); }

} // namespace secreg
