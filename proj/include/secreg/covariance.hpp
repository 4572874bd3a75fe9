#pragma once

#include "secreg/matrix.hpp"

namespace secreg {

/// Transmit covariance: symmetric PSD with a cached trace. Instances come
/// from the validating factory or from construction paths that guarantee
/// PSD-ness (V diag(lambda) V^T with lambda >= 0).
class CovarianceMatrix {
public:
    /// Empty placeholder (dim 0); assign a real instance before use.
    CovarianceMatrix() = default;

    static CovarianceMatrix zero(int nt);

    /// Validates: square, symmetric within 1e-10 (then symmetrized),
    /// minimum eigenvalue >= -psd_tol. Throws std::domain_error otherwise.
    static CovarianceMatrix from_matrix(Matrix q, double psd_tol = 1e-9);

    /// For callers whose construction guarantees PSD; no eigen check.
    static CovarianceMatrix assume_psd(Matrix q);

    const Matrix& matrix() const noexcept { return q_; }
    double trace() const noexcept { return trace_; }
    int dim() const noexcept { return q_.rows(); }

private:
    explicit CovarianceMatrix(Matrix q);

    Matrix q_;
    double trace_ = 0.0;
};

} // namespace secreg
