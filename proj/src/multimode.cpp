#include "squeeze/multimode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "squeeze/errors.hpp"

namespace squeeze {

namespace {

constexpr Eigen::Index kMaxModes = 64;

// Orthonormal columns u with Z conj(u) = sigma u, sigma descending, from the
// real symmetric embedding M = [[Re Z, Im Z], [Im Z, -Re Z]]: if (x; y) is an
// eigenvector of M with eigenvalue sigma, u = x + i y satisfies the relation.
void takagi_columns(const MatrixXc& Z, MatrixXc& U, Eigen::VectorXd& sigma) {
  const Eigen::Index n = Z.rows();
  Eigen::MatrixXd M(2 * n, 2 * n);
  M.topLeftCorner(n, n) = Z.real();
  M.topRightCorner(n, n) = Z.imag();
  M.bottomLeftCorner(n, n) = Z.imag();
  M.bottomRightCorner(n, n) = -Z.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  if (es.info() != Eigen::Success) throw Error("eigendecomposition of the Takagi embedding failed");
  const auto& vals = es.eigenvalues();     // ascending
  const auto& vecs = es.eigenvectors();

  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  const double zero_tol = 1e-13 * scale * static_cast<double>(n);

  U.resize(n, n);
  sigma.resize(n);
  Eigen::Index filled = 0;
  for (Eigen::Index j = 2 * n - 1; j >= 0 && filled < n; --j) {
    if (vals(j) <= zero_tol) break;
    U.col(filled) = vecs.col(j).head(n).cast<cplx>() + cplx{0.0, 1.0} * vecs.col(j).tail(n).cast<cplx>();
    sigma(filled) = vals(j);
    ++filled;
  }
  if (filled == n) return;

  // Null space: the 2m eigenvectors with |sigma| <= zero_tol give 2m complex
  // candidates spanning an m-dimensional complex space; orthonormalize.
  std::vector<VectorXc> candidates;
  for (Eigen::Index j = 0; j < 2 * n; ++j)
    if (std::abs(vals(j)) <= zero_tol)
      candidates.push_back(vecs.col(j).head(n).cast<cplx>() + cplx{0.0, 1.0} * vecs.col(j).tail(n).cast<cplx>());
  while (filled < n) {
    Eigen::Index best = -1;
    double best_norm = 0.0;
    VectorXc best_vec;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      VectorXc v = candidates[c];
      for (Eigen::Index k = 0; k < filled; ++k) v -= U.col(k).dot(v) * U.col(k);
      if (v.norm() > best_norm) {
        best_norm = v.norm();
        best = static_cast<Eigen::Index>(c);
        best_vec = v;
      }
    }
    if (best < 0 || best_norm < 1e-8) throw Error("could not complete the Takagi null-space basis");
    U.col(filled) = best_vec / best_norm;
    sigma(filled) = 0.0;
    ++filled;
  }
}

// Max |f| at the two ends of every line along axis k.
double axis_edge_max(const GridFunction& f, std::size_t k) {
  const std::size_t stride = f.stride(k);
  const std::size_t n = f.axis(k).n_points;
  const auto s = f.samples();
  double worst = 0.0;
  for (std::size_t b = 0; b < s.size() / (stride * n); ++b)
    for (std::size_t q = 0; q < stride; ++q) {
      const std::size_t base = b * n * stride + q;
      worst = std::max({worst, std::abs(s[base]), std::abs(s[base + (n - 1) * stride])});
    }
  return worst;
}

}  // namespace

MatrixXc conjugate_by_rotation(const MatrixXc& Phi, const MatrixXc& Z) {
  const MatrixXc rot = expm_antihermitian(cplx{0.0, -1.0} * Phi);
  return rot * Z * rot.transpose();
}

TakagiResult takagi(const MatrixXc& Z_in, double sym_tol) {
  if (Z_in.rows() != Z_in.cols() || Z_in.rows() == 0) throw PreconditionError("Takagi needs a square matrix");
  if (Z_in.rows() > kMaxModes) throw PreconditionError("Takagi is limited to N <= 64");
  const double asym = symmetry_defect(Z_in);
  if (asym > sym_tol) {
    std::ostringstream msg;
    msg << "matrix is not symmetric: max |Z - Z^T| = " << asym;
    throw PreconditionError(msg.str());
  }
  const MatrixXc Z = 0.5 * (Z_in + Z_in.transpose());
  const Eigen::Index n = Z.rows();

  MatrixXc U;
  Eigen::VectorXd sigma;
  takagi_columns(Z, U, sigma);

  TakagiResult res;
  res.Z_D = MatrixXc::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    // Rephase so the largest entry of the column is real positive; the phase
    // goes into the diagonal entry (Z = sum sigma u u^T).
    Eigen::Index imax = 0;
    const double m = U.col(k).cwiseAbs().maxCoeff();
    while (std::abs(U(imax, k)) < m * (1.0 - 1e-12)) ++imax;
    const cplx ph = U(imax, k) / std::abs(U(imax, k));
    U.col(k) *= std::conj(ph);
    U(imax, k) = std::abs(U(imax, k));
    res.Z_D(k, k) = sigma(k) * ph * ph;
  }
  for (Eigen::Index k = 0; k + 1 < n; ++k)
    if (sigma(k) - sigma(k + 1) < 1e-8) res.degenerate = true;

  res.U = U;
  MatrixXc phi = cplx{0.0, 1.0} * logm_unitary(U.adjoint());
  res.Phi = 0.5 * (phi + phi.adjoint());
  res.residual = (conjugate_by_rotation(res.Phi, Z) - res.Z_D).norm();
  return res;
}

PauliRotationReport two_mode_rotation_identity(double theta, cplx z) {
  MatrixXc s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, cplx(0, -1), cplx(0, 1), 0;
  s3 << 1, 0, 0, -1;
  PauliRotationReport rep;
  rep.theta = theta;
  rep.rotation = expm_antihermitian(cplx{0.0, theta} * s2);
  rep.conjugated = rep.rotation * s1 * rep.rotation.adjoint();
  const double c2 = std::cos(2.0 * theta);
  const double sn2 = std::sin(2.0 * theta);
  // e^{i t s2} s1 e^{-i t s2} = cos 2t s1 + sin 2t s3; at t = pi/4 this is s3.
  const MatrixXc expected = c2 * s1 + sn2 * s3;
  rep.pauli_residual = (rep.conjugated - expected).cwiseAbs().maxCoeff();
  const MatrixXc mapped = rep.rotation.transpose() * (z * s3) * rep.rotation;
  const MatrixXc expected_gen = z * (c2 * s3 + sn2 * s1);
  rep.generator_residual = (mapped - expected_gen).cwiseAbs().maxCoeff();
  return rep;
}

GridFunction apply_exact_N(std::span<const double> r_values, const GridFunction& psi,
                           kernels::Stencil stencil, double boundary_tol) {
  const std::size_t modes = psi.dims();
  if (modes > 3) throw ConfigError("grid-based N-mode squeezing is limited to N <= 3");
  if (r_values.size() != modes) throw ShapeError("one squeeze magnitude per grid axis is required");
  const double peak = max_abs(psi);
  GridFunction cur = psi;
  for (std::size_t k = 0; k < modes; ++k) {
    const double r = r_values[k];
    if (r == 0.0) continue;
    const Axis& axis = psi.axis(k);
    const double factor = std::exp(-r);
    const bool outside = factor * axis.x_max > axis.x_max || factor * axis.x_min < axis.x_min;
    if (outside && axis_edge_max(cur, k) > boundary_tol * peak) {
      std::ostringstream msg;
      msg << "axis " << k << ": S(" << r << ") reads outside the grid where the state has not decayed";
      throw RangeError(msg.str());
    }
    const std::size_t stride = psi.stride(k);
    const kernels::DilationLines lines{&axis, stride, psi.size() / (stride * axis.n_points), stride};
    GridFunction next = GridFunction::zeros(psi.axes());
    kernels::omp::dilate(lines, factor, std::exp(-0.5 * r), stencil, cur.samples(), next.samples());
    cur = std::move(next);
  }
  return cur;
}

EigenLattice eigen_lattice(std::span<const double> r_values, std::span<const std::size_t> index) {
  if (r_values.size() != index.size()) throw ShapeError("eigen_lattice needs one index per mode");
  EigenLattice out;
  out.r_values.assign(r_values.begin(), r_values.end());
  out.index.assign(index.begin(), index.end());
  // Modes sharing |r_k| are combined first: the signed half-integer sums are
  // exact, so (r, -r) gives exactly r (n - m).
  std::vector<std::pair<double, double>> groups;  // |r|, sum of +-(n + 1/2)
  for (std::size_t k = 0; k < index.size(); ++k) {
    const double mag = std::abs(r_values[k]);
    const double term = std::copysign(static_cast<double>(index[k]) + 0.5, r_values[k]);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == mag; });
    if (it == groups.end())
      groups.emplace_back(mag, term);
    else
      it->second += term;
  }
  for (const auto& [mag, sum] : groups) out.log_s_plus += mag * sum;
  out.s_plus = std::exp(out.log_s_plus);
  out.s_minus = std::exp(-out.log_s_plus);
  return out;
}

double eigen_lattice_value(std::span<const double> r_values, std::span<const std::size_t> index,
                           LatticeSign sign) {
  const auto l = eigen_lattice(r_values, index);
  return sign == LatticeSign::plus ? l.s_plus : l.s_minus;
}

TensorTaylorState multimode_series_apply(std::span<const double> r_values, const TensorTaylorState& t) {
  if (r_values.size() != t.modes()) throw ShapeError("one squeeze magnitude per mode is required");
  TensorTaylorState out = t;
  auto c = out.coeffs();
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    if (c[flat] == cplx{}) continue;
    const auto idx = t.multi_index(flat);
    c[flat] *= eigen_lattice(r_values, idx).s_minus;
  }
  return out;
}

}  // namespace squeeze
