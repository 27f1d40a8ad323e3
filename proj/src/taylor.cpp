#include "squeeze/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "squeeze/errors.hpp"

namespace squeeze {

TaylorState::TaylorState(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {}

TaylorState TaylorState::monomial(std::size_t n) {
  std::vector<cplx> c(n + 1);
  c[n] = inv_sqrt_factorial(n);
  return TaylorState(std::move(c));
}

TaylorState TaylorState::gaussian(cplx amplitude, cplx b, cplx c, std::size_t n_max) {
  std::vector<cplx> a(n_max + 1);
  a[0] = amplitude;
  if (n_max >= 1) a[1] = b * a[0];
  for (std::size_t n = 1; n < n_max; ++n)
    a[n + 1] = (b * a[n] + 2.0 * c * a[n - 1]) / static_cast<double>(n + 1);
  return TaylorState(std::move(a));
}

cplx TaylorState::evaluate(double x) const { return evaluate(cplx{x, 0.0}); }

cplx TaylorState::evaluate(cplx x) const {
  cplx acc{};
  for (std::size_t n = coeffs_.size(); n-- > 0;) acc = acc * x + coeffs_[n];
  return acc;
}

GridFunction TaylorState::on_grid(const Axis& axis) const {
  return GridFunction::sample(axis, [this](double x) { return evaluate(x); });
}

cplx TaylorState::resonant_coefficient(std::size_t n) const {
  // c_n * sqrt(n!), written as a division by the f+_n coefficient.
  return coeff(n) / inv_sqrt_factorial(n);
}

double TaylorState::tail_bound(double radius) const {
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    if (coeffs_[n] != cplx{}) return std::abs(coeffs_[n]) * std::pow(radius, static_cast<double>(n));
  }
  return 0.0;
}

double TaylorState::convergence_radius(double tol) const {
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    if (coeffs_[n] == cplx{}) continue;
    if (n == 0) return std::numeric_limits<double>::infinity();
    return std::exp((std::log(tol) - std::log(std::abs(coeffs_[n]))) / static_cast<double>(n));
  }
  return std::numeric_limits<double>::infinity();
}

TaylorState TaylorState::trimmed(double drop_tol) const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  std::size_t keep = coeffs_.size();
  while (keep > 1 && std::abs(coeffs_[keep - 1]) <= drop_tol * m) --keep;
  return TaylorState(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(keep)));
}

TaylorState TaylorState::reflected() const {
  std::vector<cplx> c = coeffs_;
  for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
  return TaylorState(std::move(c));
}

TaylorState TaylorState::times(const TaylorState& other) const {
  const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  std::vector<cplx> c(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size() && i + j < n; ++j)
      c[i + j] += coeffs_[i] * other.coeffs_[j];
  return TaylorState(std::move(c));
}

TaylorState& TaylorState::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

DualState DualState::basis(std::size_t n) {
  std::vector<cplx> d(n + 1);
  d[n] = 1.0;
  return DualState(std::move(d));
}

cplx DualState::pair(const TaylorState& phi) const {
  cplx acc{};
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] == cplx{}) continue;
    acc += coeffs_[n] * phi.resonant_coefficient(n);
  }
  return acc;
}

TensorTaylorState::TensorTaylorState(std::vector<std::size_t> extents, std::vector<cplx> coeffs)
    : extents_(std::move(extents)), coeffs_(std::move(coeffs)) {
  std::size_t total = 1;
  for (auto e : extents_) total *= e;
  if (extents_.empty() || total != coeffs_.size())
    throw ShapeError("tensor Taylor coefficients do not match extents");
}

TensorTaylorState TensorTaylorState::outer(std::span<const TaylorState> factors) {
  std::vector<std::size_t> ext;
  for (const auto& f : factors) ext.push_back(f.size());
  std::vector<cplx> c{1.0};
  for (const auto& f : factors) {
    std::vector<cplx> next;
    next.reserve(c.size() * f.size());
    for (const auto& a : c)
      for (const auto& b : f.coeffs()) next.push_back(a * b);
    c = std::move(next);
  }
  return TensorTaylorState(std::move(ext), std::move(c));
}

TensorTaylorState TensorTaylorState::monomial(std::span<const std::size_t> index) {
  std::vector<TaylorState> f;
  for (auto n : index) f.push_back(TaylorState::monomial(n));
  return outer(f);
}

std::size_t TensorTaylorState::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != extents_.size()) throw ShapeError("multi-index rank mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < extents_.size(); ++k) {
    if (index[k] >= extents_[k]) throw ShapeError("multi-index out of range");
    flat = flat * extents_[k] + index[k];
  }
  return flat;
}

std::vector<std::size_t> TensorTaylorState::multi_index(std::size_t flat) const {
  std::vector<std::size_t> idx(extents_.size());
  for (std::size_t k = extents_.size(); k-- > 0;) {
    idx[k] = flat % extents_[k];
    flat /= extents_[k];
  }
  return idx;
}

cplx TensorTaylorState::coeff(std::span<const std::size_t> index) const {
  for (std::size_t k = 0; k < index.size() && k < extents_.size(); ++k)
    if (index[k] >= extents_[k]) return {};
  return coeffs_[flat_index(index)];
}

cplx TensorTaylorState::evaluate(std::span<const double> x) const {
  if (x.size() != extents_.size()) throw ShapeError("evaluation point rank mismatch");
  // Nested Horner: contract the last axis first.
  std::vector<cplx> level(coeffs_.begin(), coeffs_.end());
  for (std::size_t k = extents_.size(); k-- > 0;) {
    const std::size_t n = extents_[k];
    const std::size_t blocks = level.size() / n;
    std::vector<cplx> next(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      cplx acc{};
      for (std::size_t j = n; j-- > 0;) acc = acc * x[k] + level[b * n + j];
      next[b] = acc;
    }
    level = std::move(next);
  }
  return level.front();
}

GridFunction TensorTaylorState::on_grid(std::vector<Axis> axes) const {
  if (axes.size() != extents_.size()) throw ShapeError("grid rank does not match series rank");
  return GridFunction::sample(std::move(axes),
                              [this](std::span<const double> x) { return evaluate(x); });
}

}  // namespace squeeze
