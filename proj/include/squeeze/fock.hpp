#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "squeeze/grid.hpp"
#include "squeeze/linalg.hpp"

namespace squeeze {

/// Levels excluded from interior-block comparisons.
inline constexpr std::size_t kTruncationMargin = 10;

struct TruncatedOperator {
  MatrixXc matrix;
  std::size_t dim = 0;
  std::string label;
  /// Population of the top kTruncationMargin levels of U|0> (or |0,0>).
  double tail_population = 0.0;
  bool truncation_ok = true;
};

/// a with a[n-1, n] = sqrt(n), and its adjoint.
std::pair<MatrixXc, MatrixXc> build_ladder(std::size_t dim);

/// H(z) = (z a^dag^2 - z* a^2) / (2i) in the truncated basis.
MatrixXc squeeze_generator(cplx z, std::size_t dim);

/// exp(1/2 (z a^dag^2 - z* a^2)).
TruncatedOperator squeeze_matrix(cplx z, std::size_t dim);
/// exp(i phi a^dag a), exactly diagonal.
TruncatedOperator rotation_matrix(double phi, std::size_t dim);
/// exp(z a1^dag a2^dag - z* a1 a2) on the dim^2 tensor space (index n1*dim+n2).
TruncatedOperator two_mode_squeeze_matrix(cplx z, std::size_t dim_per_mode);
/// S1(z1) S2(z2) on the tensor space.
TruncatedOperator product_squeeze_matrix(cplx z1, cplx z2, std::size_t dim_per_mode);
/// exp(theta (a1^dag a2 - a1 a2^dag)).
TruncatedOperator beam_splitter_matrix(double theta, std::size_t dim_per_mode);
/// S_2(Z) = exp(1/2 a^dag^T Z a^dag - h.c.) for a 2x2 symmetric Z.
TruncatedOperator two_mode_general_squeeze(const MatrixXc& Z, std::size_t dim_per_mode);
/// R_2(Phi) = exp(i a^dag^T Phi a) for a 2x2 Hermitian Phi.
TruncatedOperator two_mode_rotation_matrix(const MatrixXc& Phi, std::size_t dim_per_mode);

/// max |U^H U - I| over levels < dim - margin.
double interior_unitarity_defect(const TruncatedOperator& op, std::size_t margin = kTruncationMargin);
/// Spectral norm of (A - B) restricted to levels < limit.
double interior_difference(const MatrixXc& a, const MatrixXc& b, std::size_t limit);
/// Spectral norm of (A - B) on two-mode states with n1 + n2 <= max_total.
double two_mode_block_difference(const MatrixXc& a, const MatrixXc& b, std::size_t dim_per_mode,
                                 std::size_t max_total);
/// Total-photon bound used for two-mode interior blocks: 2 (dim - margin) / 3.
std::size_t two_mode_interior_total(std::size_t dim_per_mode, std::size_t margin = kTruncationMargin);

/// Projects a 1D grid state onto h_0..h_{dim-1}. Throws ResolutionError
/// when the grid cannot resolve h_{dim-1} or the state has boundary mass.
VectorXc project_onto_fock(const GridFunction& psi, std::size_t dim);
/// sum_n amp[n] h_n(x) on the grid.
GridFunction synthesize_from_fock(const VectorXc& amp, const Axis& axis);

struct OracleReport {
  double max_dev = 0.0;
  double l2_dev = 0.0;
  std::size_t dim = 0;
  std::size_t margin = kTruncationMargin;
};

/// Compares Hermite projections of a grid state with a Fock vector.
OracleReport oracle_compare(const GridFunction& analytic_state, const VectorXc& fock_state,
                            std::size_t dim);

/// R(phi) psi through the Hermite basis; dim is grown until the captured
/// norm reaches 1 - 1e-12 (ResolutionError if that needs more than max_dim).
GridFunction rotate_grid(double phi, const GridFunction& psi, std::size_t max_dim = 48);

}  // namespace squeeze
