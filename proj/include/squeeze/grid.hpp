#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "squeeze/special.hpp"

namespace squeeze {

/// One uniform axis x_i = x_min + i*h, i = 0..n_points-1.
struct Axis {
  double x_min = -8.0;
  double x_max = 8.0;
  std::size_t n_points = 2048;

  double spacing() const { return (x_max - x_min) / static_cast<double>(n_points - 1); }
  double at(std::size_t i) const;
  /// Throws ConfigError unless n_points >= 2 and x_max > x_min.
  void validate() const;
  bool operator==(const Axis&) const = default;
};

/// Default grid: [-8, 8] with 2048 points.
inline Axis default_axis() { return Axis{}; }

/// Complex samples on a 1D axis or an N-dimensional tensor grid.
/// Storage is row-major: the last axis varies fastest.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(std::vector<Axis> axes, std::vector<cplx> samples);
  explicit GridFunction(Axis axis, std::vector<cplx> samples);

  static GridFunction sample(const Axis& axis, const std::function<cplx(double)>& f);
  static GridFunction sample(std::vector<Axis> axes,
                             const std::function<cplx(std::span<const double>)>& f);
  static GridFunction zeros(std::vector<Axis> axes);

  std::size_t dims() const { return axes_.size(); }
  const std::vector<Axis>& axes() const { return axes_; }
  const Axis& axis(std::size_t k = 0) const { return axes_.at(k); }
  std::size_t size() const { return samples_.size(); }
  /// Distance between consecutive samples along axis k.
  std::size_t stride(std::size_t k) const;

  std::span<const cplx> samples() const { return samples_; }
  std::span<cplx> samples() { return samples_; }
  const cplx& operator[](std::size_t i) const { return samples_[i]; }
  cplx& operator[](std::size_t i) { return samples_[i]; }

  /// Position of sample i on a 1D grid.
  double x(std::size_t i) const { return axes_.front().at(i); }
  bool same_grid(const GridFunction& other) const { return axes_ == other.axes_; }

  GridFunction& operator*=(cplx s);
  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);

 private:
  std::vector<Axis> axes_;
  std::vector<cplx> samples_;
};

GridFunction operator*(cplx s, GridFunction f);
GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);

/// Pointwise product, e.g. x*psi for moments.
GridFunction pointwise(const GridFunction& f, const std::function<cplx(double, cplx)>& op);

/// Composite trapezoid weights of an axis.
std::vector<double> trapezoid_weights(const Axis& axis);

/// Max |f| over the grid.
double max_abs(const GridFunction& f);
/// Max |f| over the first and last sample of every axis line.
double boundary_max(const GridFunction& f);

}  // namespace squeeze
