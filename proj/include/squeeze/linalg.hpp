#pragma once

#include <Eigen/Dense>

namespace squeeze {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// exp(G) for anti-Hermitian G, from the eigendecomposition of the
/// Hermitian matrix iG. The result is unitary to rounding.
MatrixXc expm_antihermitian(const MatrixXc& g);

/// Principal logarithm of a unitary matrix, eigenphases in (-pi, pi].
/// The result is anti-Hermitian.
MatrixXc logm_unitary(const MatrixXc& u);

/// Largest |A - A^H| entry.
double hermiticity_defect(const MatrixXc& a);
/// Largest |A - A^T| entry.
double symmetry_defect(const MatrixXc& a);

/// Kronecker product.
MatrixXc kron(const MatrixXc& a, const MatrixXc& b);

}  // namespace squeeze
