#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "squeeze/grid.hpp"
#include "squeeze/special.hpp"

namespace squeeze {

/// Truncated power series psi(x) = sum_n c_n x^n of an entire state.
///
/// Coefficients are the raw Taylor coefficients c_n = psi^(n)(0)/n!.
/// The coefficient over the resonant basis f+_n = x^n/sqrt(n!) is
/// sqrt(n!) c_n and is only formed on demand (resonant_coefficient).
class TaylorState {
 public:
  TaylorState() = default;
  explicit TaylorState(std::vector<cplx> coeffs);

  /// f+_n = x^n / sqrt(n!).
  static TaylorState monomial(std::size_t n);
  /// amplitude * exp(b x + c x^2) up to x^n_max, via
  /// (n+1) a_{n+1} = b a_n + 2c a_{n-1}.
  static TaylorState gaussian(cplx amplitude, cplx b, cplx c, std::size_t n_max);

  std::size_t n_max() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const cplx> coeffs() const { return coeffs_; }
  cplx coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : cplx{}; }

  cplx evaluate(double x) const;
  cplx evaluate(cplx x) const;
  /// Samples the series on a grid (no convergence check).
  GridFunction on_grid(const Axis& axis) const;

  /// <f-_n, psi> = psi^(n)(0)/sqrt(n!) (bilinear pairing, no quadrature).
  cplx resonant_coefficient(std::size_t n) const;

  /// |c_N| R^N for the last nonzero coefficient.
  double tail_bound(double radius) const;
  /// Largest R with tail_bound(R) <= tol; +inf for a polynomial of degree 0
  /// or one whose last coefficient is zero after trimming.
  double convergence_radius(double tol = 1e-12) const;

  /// Drops trailing coefficients with |c_n| <= drop_tol * max|c|.
  TaylorState trimmed(double drop_tol) const;
  /// psi(-x).
  TaylorState reflected() const;
  /// Cauchy product truncated at max(n_max) of the operands.
  TaylorState times(const TaylorState& other) const;

  TaylorState& operator*=(cplx s);

 private:
  std::vector<cplx> coeffs_;
};

/// Coefficients d_n over the distributional basis f-_n = (-1)^n delta^(n)/sqrt(n!).
/// Only usable through pairing with a TaylorState.
class DualState {
 public:
  DualState() = default;
  explicit DualState(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {}

  /// f-_n itself: unit coefficient at n.
  static DualState basis(std::size_t n);

  std::span<const cplx> coeffs() const { return coeffs_; }
  /// sum_n d_n <f-_n, phi>.
  cplx pair(const TaylorState& phi) const;

 private:
  std::vector<cplx> coeffs_;
};

/// Tensor-product power series sum c_{n1..nN} x1^n1 ... xN^nN (row-major).
class TensorTaylorState {
 public:
  TensorTaylorState() = default;
  TensorTaylorState(std::vector<std::size_t> extents, std::vector<cplx> coeffs);

  static TensorTaylorState outer(std::span<const TaylorState> factors);
  /// f+_{n1..nN}.
  static TensorTaylorState monomial(std::span<const std::size_t> index);

  std::size_t modes() const { return extents_.size(); }
  const std::vector<std::size_t>& extents() const { return extents_; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  std::span<cplx> coeffs() { return coeffs_; }
  cplx coeff(std::span<const std::size_t> index) const;
  std::size_t flat_index(std::span<const std::size_t> index) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  cplx evaluate(std::span<const double> x) const;
  GridFunction on_grid(std::vector<Axis> axes) const;

 private:
  std::vector<std::size_t> extents_;
  std::vector<cplx> coeffs_;
};

}  // namespace squeeze
