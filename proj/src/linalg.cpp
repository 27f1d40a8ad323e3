#include "squeeze/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "squeeze/errors.hpp"
#include "squeeze/special.hpp"

namespace squeeze {

MatrixXc expm_antihermitian(const MatrixXc& g) {
  if (g.rows() != g.cols()) throw ShapeError("expm needs a square matrix");
  // G = -i H with H = i G Hermitian.
  MatrixXc h = cplx{0.0, 1.0} * g;
  h = 0.5 * (h + h.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(h);
  if (es.info() != Eigen::Success) throw Error("Hermitian eigendecomposition failed");
  VectorXc phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) phases(k) = std::polar(1.0, -es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

MatrixXc logm_unitary(const MatrixXc& u) {
  if (u.rows() != u.cols()) throw ShapeError("logm needs a square matrix");
  // A unitary matrix is normal, so its complex Schur form is diagonal up to
  // rounding; the Schur basis also handles clustered eigenphases.
  Eigen::ComplexSchur<MatrixXc> schur(u);
  if (schur.info() != Eigen::Success) throw Error("complex Schur decomposition failed");
  const MatrixXc& q = schur.matrixU();
  const MatrixXc& t = schur.matrixT();
  VectorXc logs(u.rows());
  for (Eigen::Index k = 0; k < u.rows(); ++k) {
    double phase = std::arg(t(k, k));
    if (phase <= -kPi) phase = kPi;
    logs(k) = cplx{0.0, phase};
  }
  MatrixXc l = q * logs.asDiagonal() * q.adjoint();
  return 0.5 * (l - l.adjoint());
}

double hermiticity_defect(const MatrixXc& a) { return (a - a.adjoint()).cwiseAbs().maxCoeff(); }
double symmetry_defect(const MatrixXc& a) { return (a - a.transpose()).cwiseAbs().maxCoeff(); }

MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
  MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace squeeze
