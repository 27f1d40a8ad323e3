#include "squeeze/fock.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/SVD>

#include "squeeze/errors.hpp"
#include "squeeze/kernels.hpp"
#include "squeeze/states.hpp"

namespace squeeze {

namespace {

const cplx I{0.0, 1.0};

MatrixXc identity(std::size_t dim) { return MatrixXc::Identity(dim, dim); }

void require_dim(std::size_t dim) {
  if (dim < 2) throw ConfigError("Fock truncation needs at least two levels");
  if (dim > 400) throw ConfigError("Fock truncation above 400 levels is not supported");
}

double single_tail(const MatrixXc& u, std::size_t margin) {
  const auto dim = static_cast<std::size_t>(u.rows());
  double tail = 0.0;
  for (std::size_t n = dim > margin ? dim - margin : 0; n < dim; ++n) tail += std::norm(u(n, 0));
  return tail;
}

double two_mode_tail(const MatrixXc& u, std::size_t d, std::size_t margin) {
  double tail = 0.0;
  const std::size_t edge = d > margin ? d - margin : 0;
  for (std::size_t n1 = 0; n1 < d; ++n1)
    for (std::size_t n2 = 0; n2 < d; ++n2)
      if (n1 >= edge || n2 >= edge) tail += std::norm(u(n1 * d + n2, 0));
  return tail;
}

TruncatedOperator finish_single(MatrixXc m, std::size_t dim, std::string label) {
  TruncatedOperator op;
  op.tail_population = single_tail(m, kTruncationMargin);
  op.truncation_ok = op.tail_population <= 1e-10;
  op.matrix = std::move(m);
  op.dim = dim;
  op.label = std::move(label);
  return op;
}

TruncatedOperator finish_two_mode(MatrixXc m, std::size_t d, std::string label) {
  TruncatedOperator op;
  op.tail_population = two_mode_tail(m, d, kTruncationMargin);
  op.truncation_ok = op.tail_population <= 1e-10;
  op.matrix = std::move(m);
  op.dim = d;
  op.label = std::move(label);
  return op;
}

struct TwoModeLadder {
  MatrixXc a1, a2;
};

TwoModeLadder two_mode_ladder(std::size_t d) {
  const auto [a, ad] = build_ladder(d);
  (void)ad;
  return {kron(a, identity(d)), kron(identity(d), a)};
}

double spectral_norm(const MatrixXc& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixXc> svd(m);
  return svd.singularValues()(0);
}

std::string describe(const char* what, cplx z) {
  std::ostringstream s;
  s << what << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
  return s.str();
}

}  // namespace

std::pair<MatrixXc, MatrixXc> build_ladder(std::size_t dim) {
  require_dim(dim);
  MatrixXc a = MatrixXc::Zero(dim, dim);
  for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  MatrixXc ad = a.adjoint();
  return {a, ad};
}

MatrixXc squeeze_generator(cplx z, std::size_t dim) {
  const auto [a, ad] = build_ladder(dim);
  return (z * ad * ad - std::conj(z) * a * a) / (2.0 * I);
}

TruncatedOperator squeeze_matrix(cplx z, std::size_t dim) {
  const auto [a, ad] = build_ladder(dim);
  const MatrixXc g = 0.5 * (z * ad * ad - std::conj(z) * a * a);
  return finish_single(expm_antihermitian(g), dim, describe("S", z));
}

TruncatedOperator rotation_matrix(double phi, std::size_t dim) {
  require_dim(dim);
  MatrixXc m = MatrixXc::Zero(dim, dim);
  for (std::size_t n = 0; n < dim; ++n) m(n, n) = std::polar(1.0, phi * static_cast<double>(n));
  std::ostringstream s;
  s << "R(" << phi << ")";
  return finish_single(std::move(m), dim, s.str());
}

TruncatedOperator two_mode_squeeze_matrix(cplx z, std::size_t d) {
  const auto l = two_mode_ladder(d);
  const MatrixXc g = z * l.a1.adjoint() * l.a2.adjoint() - std::conj(z) * l.a1 * l.a2;
  return finish_two_mode(expm_antihermitian(g), d, describe("S2", z));
}

TruncatedOperator product_squeeze_matrix(cplx z1, cplx z2, std::size_t d) {
  const auto s1 = squeeze_matrix(z1, d);
  const auto s2 = squeeze_matrix(z2, d);
  return finish_two_mode(kron(s1.matrix, s2.matrix), d, s1.label + "*" + s2.label);
}

TruncatedOperator beam_splitter_matrix(double theta, std::size_t d) {
  const auto l = two_mode_ladder(d);
  const MatrixXc g = theta * (l.a1.adjoint() * l.a2 - l.a1 * l.a2.adjoint());
  std::ostringstream s;
  s << "B(" << theta << ")";
  return finish_two_mode(expm_antihermitian(g), d, s.str());
}

TruncatedOperator two_mode_general_squeeze(const MatrixXc& Z, std::size_t d) {
  if (Z.rows() != 2 || Z.cols() != 2) throw ShapeError("two-mode squeeze needs a 2x2 matrix");
  const auto l = two_mode_ladder(d);
  const MatrixXc* ops[2] = {&l.a1, &l.a2};
  MatrixXc g = MatrixXc::Zero(d * d, d * d);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      g += 0.5 * (Z(j, k) * ops[j]->adjoint() * ops[k]->adjoint() - std::conj(Z(j, k)) * *ops[j] * *ops[k]);
  return finish_two_mode(expm_antihermitian(g), d, "S2(Z)");
}

TruncatedOperator two_mode_rotation_matrix(const MatrixXc& Phi, std::size_t d) {
  if (Phi.rows() != 2 || Phi.cols() != 2) throw ShapeError("two-mode rotation needs a 2x2 matrix");
  if (hermiticity_defect(Phi) > 1e-12) throw PreconditionError("rotation generator must be Hermitian");
  const auto l = two_mode_ladder(d);
  const MatrixXc* ops[2] = {&l.a1, &l.a2};
  MatrixXc g = MatrixXc::Zero(d * d, d * d);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) g += I * Phi(j, k) * ops[j]->adjoint() * *ops[k];
  return finish_two_mode(expm_antihermitian(g), d, "R2(Phi)");
}

double interior_unitarity_defect(const TruncatedOperator& op, std::size_t margin) {
  const auto n = static_cast<std::size_t>(op.matrix.rows());
  const MatrixXc uu = op.matrix.adjoint() * op.matrix - MatrixXc::Identity(n, n);
  if (n == op.dim) {
    const std::size_t lim = op.dim > margin ? op.dim - margin : 0;
    return lim == 0 ? 0.0 : uu.topLeftCorner(lim, lim).cwiseAbs().maxCoeff();
  }
  // Two-mode: interior means total photon number within the bound.
  const std::size_t d = op.dim;
  const std::size_t max_total = two_mode_interior_total(d, margin);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i / d + i % d > max_total) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (j / d + j % d <= max_total) worst = std::max(worst, std::abs(uu(i, j)));
  }
  return worst;
}

double interior_difference(const MatrixXc& a, const MatrixXc& b, std::size_t limit) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shapes differ");
  limit = std::min<std::size_t>(limit, static_cast<std::size_t>(a.rows()));
  return spectral_norm((a - b).topLeftCorner(limit, limit));
}

double two_mode_block_difference(const MatrixXc& a, const MatrixXc& b, std::size_t d,
                                 std::size_t max_total) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shapes differ");
  if (static_cast<std::size_t>(a.rows()) != d * d) throw ShapeError("not a two-mode operator of this dimension");
  std::vector<Eigen::Index> keep;
  for (std::size_t i = 0; i < d * d; ++i)
    if (i / d + i % d <= max_total) keep.push_back(static_cast<Eigen::Index>(i));
  const MatrixXc diff = a - b;
  MatrixXc block(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) block(i, j) = diff(keep[i], keep[j]);
  return spectral_norm(block);
}

std::size_t two_mode_interior_total(std::size_t d, std::size_t margin) {
  return d > margin ? 2 * (d - margin) / 3 : 0;
}

VectorXc project_onto_fock(const GridFunction& psi, std::size_t dim) {
  if (psi.dims() != 1) throw ShapeError("Fock projection needs a 1D grid");
  require_dim(dim);
  const Axis& axis = psi.axis();
  const double h = axis.spacing();
  if (h * std::sqrt(2.0 * static_cast<double>(dim) + 1.0) > 1.0) {
    std::ostringstream msg;
    msg << "grid spacing " << h << " cannot resolve h_" << dim - 1;
    throw ResolutionError(msg.str());
  }
  const double peak = max_abs(psi);
  if (peak > 0.0 && boundary_max(psi) > 1e-10 * peak)
    throw ResolutionError("state has not decayed at the grid boundary");
  std::vector<double> x(axis.n_points);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = axis.at(i);
  std::vector<double> table(dim * x.size());
  kernels::omp::hermite_table(x, dim, table);
  const auto w = trapezoid_weights(axis);
  std::vector<cplx> amp(dim);
  kernels::omp::hermite_project(table, w, psi.samples(), dim, amp);
  return Eigen::Map<VectorXc>(amp.data(), static_cast<Eigen::Index>(dim));
}

GridFunction synthesize_from_fock(const VectorXc& amp, const Axis& axis) {
  const auto dim = static_cast<std::size_t>(amp.size());
  std::vector<double> x(axis.n_points);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = axis.at(i);
  std::vector<double> table(dim * x.size());
  kernels::omp::hermite_table(x, dim, table);
  std::vector<cplx> out(x.size());
  for (std::size_t n = 0; n < dim; ++n)
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += amp(n) * table[n * x.size() + i];
  return GridFunction(axis, std::move(out));
}

OracleReport oracle_compare(const GridFunction& analytic_state, const VectorXc& fock_state, std::size_t dim) {
  if (static_cast<std::size_t>(fock_state.size()) != dim) throw ShapeError("Fock vector length differs from dim");
  const VectorXc proj = project_onto_fock(analytic_state, dim);
  OracleReport rep;
  rep.dim = dim;
  const std::size_t lim = dim > rep.margin ? dim - rep.margin : 0;
  double sq = 0.0;
  for (std::size_t n = 0; n < lim; ++n) {
    const double d = std::abs(proj(n) - fock_state(n));
    rep.max_dev = std::max(rep.max_dev, d);
    sq += d * d;
  }
  rep.l2_dev = std::sqrt(sq);
  return rep;
}

GridFunction rotate_grid(double phi, const GridFunction& psi, std::size_t max_dim) {
  if (phi == 0.0) return psi;
  const double total = std::pow(norm(psi), 2);
  if (total == 0.0) return psi;
  for (std::size_t dim = 8;; dim = std::min(dim * 2, max_dim)) {
    const VectorXc amp = project_onto_fock(psi, dim);
    const double captured = amp.squaredNorm() / total;
    if (captured >= 1.0 - 1e-12) {
      // Only the captured part is rotated; the remainder is kept in place.
      VectorXc delta(amp.size());
      for (Eigen::Index n = 0; n < amp.size(); ++n)
        delta(n) = amp(n) * (std::polar(1.0, phi * static_cast<double>(n)) - 1.0);
      return psi + synthesize_from_fock(delta, psi.axis());
    }
    if (dim >= max_dim) {
      std::ostringstream msg;
      msg << "Hermite expansion captures only " << captured << " of the norm with " << dim << " levels";
      throw ResolutionError(msg.str());
    }
  }
}

}  // namespace squeeze
