#include "squeeze/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "squeeze/errors.hpp"

namespace squeeze {

double Axis::at(std::size_t i) const {
  // Anchored at both ends so the last sample is exactly x_max.
  if (i + 1 == n_points) return x_max;
  return x_min + static_cast<double>(i) * spacing();
}

void Axis::validate() const {
  if (n_points < 2) {
    std::ostringstream msg;
    msg << "grid needs at least 2 points, got " << n_points;
    throw ConfigError(msg.str());
  }
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max))
    throw ConfigError("grid needs finite x_max > x_min");
}

namespace {

std::size_t product_of_extents(const std::vector<Axis>& axes) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.n_points;
  return total;
}

}  // namespace

GridFunction::GridFunction(std::vector<Axis> axes, std::vector<cplx> samples)
    : axes_(std::move(axes)), samples_(std::move(samples)) {
  if (axes_.empty()) throw ConfigError("grid function needs at least one axis");
  for (const auto& a : axes_) a.validate();
  if (samples_.size() != product_of_extents(axes_))
    throw ShapeError("sample count does not match the product of axis extents");
}

GridFunction::GridFunction(Axis axis, std::vector<cplx> samples)
    : GridFunction(std::vector<Axis>{axis}, std::move(samples)) {}

GridFunction GridFunction::sample(const Axis& axis, const std::function<cplx(double)>& f) {
  axis.validate();
  std::vector<cplx> s(axis.n_points);
  for (std::size_t i = 0; i < axis.n_points; ++i) s[i] = f(axis.at(i));
  return GridFunction(axis, std::move(s));
}

GridFunction GridFunction::sample(std::vector<Axis> axes,
                                  const std::function<cplx(std::span<const double>)>& f) {
  for (const auto& a : axes) a.validate();
  const std::size_t total = product_of_extents(axes);
  std::vector<cplx> s(total);
  std::vector<std::size_t> idx(axes.size(), 0);
  std::vector<double> x(axes.size());
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::size_t k = 0; k < axes.size(); ++k) x[k] = axes[k].at(idx[k]);
    s[flat] = f(x);
    for (std::size_t k = axes.size(); k-- > 0;) {
      if (++idx[k] < axes[k].n_points) break;
      idx[k] = 0;
    }
  }
  return GridFunction(std::move(axes), std::move(s));
}

GridFunction GridFunction::zeros(std::vector<Axis> axes) {
  const std::size_t total = product_of_extents(axes);
  return GridFunction(std::move(axes), std::vector<cplx>(total));
}

std::size_t GridFunction::stride(std::size_t k) const {
  std::size_t s = 1;
  for (std::size_t j = k + 1; j < axes_.size(); ++j) s *= axes_[j].n_points;
  return s;
}

GridFunction& GridFunction::operator*=(cplx s) {
  for (auto& v : samples_) v *= s;
  return *this;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  if (!same_grid(other)) throw ShapeError("grid mismatch in +=");
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += other.samples_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  if (!same_grid(other)) throw ShapeError("grid mismatch in -=");
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] -= other.samples_[i];
  return *this;
}

GridFunction operator*(cplx s, GridFunction f) { return f *= s; }
GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }

GridFunction pointwise(const GridFunction& f, const std::function<cplx(double, cplx)>& op) {
  if (f.dims() != 1) throw ShapeError("pointwise needs a 1D grid");
  GridFunction out = f;
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = op(f.x(i), f[i]);
  return out;
}

std::vector<double> trapezoid_weights(const Axis& axis) {
  std::vector<double> w(axis.n_points, axis.spacing());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (const auto& v : f.samples()) m = std::max(m, std::abs(v));
  return m;
}

double boundary_max(const GridFunction& f) {
  double m = 0.0;
  const auto& axes = f.axes();
  std::vector<std::size_t> idx(axes.size(), 0);
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    bool edge = false;
    for (std::size_t k = 0; k < axes.size(); ++k)
      edge = edge || idx[k] == 0 || idx[k] + 1 == axes[k].n_points;
    if (edge) m = std::max(m, std::abs(f[flat]));
    for (std::size_t k = axes.size(); k-- > 0;) {
      if (++idx[k] < axes[k].n_points) break;
      idx[k] = 0;
    }
  }
  return m;
}

}  // namespace squeeze
