#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "squeeze/grid.hpp"
#include "squeeze/kernels.hpp"
#include "squeeze/linalg.hpp"
#include "squeeze/taylor.hpp"

namespace squeeze {

/// Hermitian Phi and diagonal Z_D with e^{-i Phi} Z e^{-i Phi^T} = Z_D.
struct TakagiResult {
  MatrixXc Phi;
  MatrixXc Z_D;
  /// Frobenius norm of e^{-i Phi} Z e^{-i Phi^T} - Z_D.
  double residual = 0.0;
  /// Unitary U = e^{i Phi} with Z = U Z_D U^T.
  MatrixXc U;
  /// Some singular values are closer than 1e-8: Phi is not unique.
  bool degenerate = false;
};

/// Symmetric (Autonne-Takagi) factorization Z = U D U^T built from the real
/// symmetric embedding [[Re Z, Im Z], [Im Z, -Re Z]], followed by
/// Phi = i log(U^H) on the principal branch.
///
/// Convention: diagonal entries are ordered by descending modulus, and each
/// column of U is rephased so that its largest-modulus entry is real and
/// positive; the phase removed from U is kept in Z_D. A diagonal Z therefore
/// gives Phi = 0 and Z_D = Z.
///
/// Throws PreconditionError if Z is not square, N > 64, or
/// max|Z - Z^T| > sym_tol.
TakagiResult takagi(const MatrixXc& Z, double sym_tol = 1e-12);

/// e^{-i Phi} Z e^{-i Phi^T}.
MatrixXc conjugate_by_rotation(const MatrixXc& Phi, const MatrixXc& Z);

struct PauliRotationReport {
  double theta = 0.0;
  MatrixXc rotation;    // e^{i theta sigma2}
  MatrixXc conjugated;  // e^{i theta sigma2} sigma1 e^{-i theta sigma2}
  /// |conjugated - sigma3| at theta = pi/4, |conjugated - sigma1| at theta = 0.
  double pauli_residual = 0.0;
  /// |R^T (z sigma3) R - z sigma1|: the coefficient matrix of
  /// S1(z) S2(-z) mapped onto that of the two-mode squeeze S_2(z).
  double generator_residual = 0.0;
};

PauliRotationReport two_mode_rotation_identity(double theta = kPi / 4, cplx z = {0.4, 0.0});

/// prod_k e^{-r_k/2} psi(e^{-r_1} x_1, ..., e^{-r_N} x_N) as successive
/// 1D dilations. N <= 3.
GridFunction apply_exact_N(std::span<const double> r_values, const GridFunction& psi,
                           kernels::Stencil stencil = kernels::Stencil::octic,
                           double boundary_tol = 1e-10);

/// Generalized eigenvalue exp(+-sum_k r_k (n_k + 1/2)) at one multi-index.
/// r_k are signed: (r, -r) is the (z, -z) two-mode diagonal.
struct EigenLattice {
  std::vector<double> r_values;
  std::vector<std::size_t> index;
  double log_s_plus = 0.0;
  double s_plus = 1.0;
  double s_minus = 1.0;
};

enum class LatticeSign { plus, minus };

EigenLattice eigen_lattice(std::span<const double> r_values, std::span<const std::size_t> index);
/// Selected family member.
double eigen_lattice_value(std::span<const double> r_values, std::span<const std::size_t> index,
                           LatticeSign sign);

/// c_{n1..nN} -> s-_{n1..nN} c_{n1..nN}.
TensorTaylorState multimode_series_apply(std::span<const double> r_values,
                                         const TensorTaylorState& t);

}  // namespace squeeze
