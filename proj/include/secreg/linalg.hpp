#pragma once

#include <span>
#include <vector>

#include "secreg/matrix.hpp"

namespace secreg {

/// Eigendecomposition of a symmetric matrix: S = V diag(eigenvalues) V^T,
/// eigenvalues sorted descending, eigenvector columns aligned with them.
struct SymEigResult {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

/// n x n identity except rows/cols i,j carry the 2x2 rotation block
/// [[cos t, -sin t], [sin t, cos t]]. Indices are zero based, i < j.
Matrix givens(int n, int i, int j, double theta);

/// Ordered product of Givens factors over pairs (i,j), i<j, in lexicographic
/// order: V = G(0,1) G(0,2) ... G(0,n-1) G(1,2) ... G(n-2,n-1).
/// angles.size() must equal n(n-1)/2. Result is orthogonal with det +1.
Matrix rotation_from_angles(int n, std::span<const double> angles);

/// Cyclic Jacobi on (S+S^T)/2. Accurate to ~1e-14 relative for the small
/// dimensions used here.
SymEigResult sym_eig(const Matrix& s);

/// Natural-log determinant of a symmetric positive definite matrix, via the
/// eigenvalue sum. Throws std::domain_error if any eigenvalue <= 1e-12.
double logdet_psd(const Matrix& m);

/// Same value via Cholesky, much faster. For matrices bounded away from
/// singular (receive covariances here are I + H Q H^T >= I). Throws
/// std::domain_error when a pivot fails to stay positive.
double logdet_spd(const Matrix& m);

/// True iff the minimum eigenvalue of (M+M^T)/2 is >= -tol.
bool is_psd(const Matrix& m, double tol);

} // namespace secreg
