#include "squeeze/states.hpp"

#include <cmath>
#include <sstream>

#include "squeeze/errors.hpp"
#include "squeeze/kernels.hpp"

namespace squeeze {

cplx vacuum_value(double x) { return vacuum_peak() * std::exp(-0.5 * x * x); }

cplx coherent_value(cplx alpha, double x) {
  const double s2 = std::sqrt(2.0);
  const cplx expo = -0.5 * x * x + s2 * alpha * x - 0.5 * alpha * alpha - 0.5 * std::norm(alpha);
  return vacuum_peak() * std::exp(expo);
}

GridFunction make_vacuum(const Axis& axis) { return GridFunction::sample(axis, vacuum_value); }

GridFunction make_coherent(cplx alpha, const Axis& axis) {
  return GridFunction::sample(axis, [alpha](double x) { return coherent_value(alpha, x); });
}

GridFunction make_state(const StateKind& kind, const Axis& axis) {
  if (const auto* c = std::get_if<Coherent>(&kind)) return make_coherent(c->alpha, axis);
  return make_vacuum(axis);
}

GridFunction make_bump(double a, const Axis& axis) {
  if (!(a > 0.0)) throw ConfigError("bump half-width must be positive");
  return GridFunction::sample(axis, [a](double x) -> cplx {
    const double q = x / a;
    if (std::abs(q) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - q * q));
  });
}

TaylorState taylor_of_state(const StateKind& kind, std::size_t n_max) {
  cplx alpha{};
  if (const auto* c = std::get_if<Coherent>(&kind)) alpha = c->alpha;
  // psi_alpha(x) = K exp(sqrt2 alpha x - x^2/2), and
  // exp(2 s t - t^2) = sum H_n(s) t^n / n! with t = x/sqrt2, s = alpha.
  // h_n = H_n(alpha) / (2^{n/2} n!) obeys h_{n+1} = (sqrt2 alpha h_n - h_{n-1}) / (n+1).
  const cplx k = vacuum_peak() * std::exp(-0.5 * alpha * alpha - 0.5 * std::norm(alpha));
  const double s2 = std::sqrt(2.0);
  std::vector<cplx> c(n_max + 1);
  cplx prev{};
  cplx cur = 1.0;
  c[0] = k;
  for (std::size_t n = 0; n < n_max; ++n) {
    const cplx next = (s2 * alpha * cur - prev) / static_cast<double>(n + 1);
    prev = cur;
    cur = next;
    c[n + 1] = k * cur;
  }
  return TaylorState(std::move(c));
}

TaylorCheck check_taylor(const TaylorState& t, double radius, double tol) {
  TaylorCheck out{radius, t.tail_bound(radius), false, {}};
  out.converged = out.tail_bound < tol;
  if (!out.converged) {
    std::ostringstream msg;
    msg << "Taylor series not converged on |x| <= " << radius << ": tail bound " << out.tail_bound
        << " >= " << tol << " at N_max = " << t.n_max();
    out.warning = msg.str();
  }
  return out;
}

cplx inner_product(const GridFunction& f, const GridFunction& g) {
  if (!f.same_grid(g)) throw ShapeError("inner product of functions on different grids");
  const auto& axes = f.axes();
  std::vector<std::vector<double>> w;
  for (const auto& a : axes) w.push_back(trapezoid_weights(a));
  std::vector<std::size_t> idx(axes.size(), 0);
  cplx acc{};
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    double weight = 1.0;
    for (std::size_t k = 0; k < axes.size(); ++k) weight *= w[k][idx[k]];
    acc += weight * std::conj(f[flat]) * g[flat];
    for (std::size_t k = axes.size(); k-- > 0;) {
      if (++idx[k] < axes[k].n_points) break;
      idx[k] = 0;
    }
  }
  return acc;
}

double norm(const GridFunction& f) { return std::sqrt(inner_product(f, f).real()); }

double l2_distance(const GridFunction& f, const GridFunction& g) { return norm(f - g); }

double l2_distance_within(const GridFunction& f, const GridFunction& g, double radius) {
  if (!f.same_grid(g) || f.dims() != 1) throw ShapeError("l2_distance_within needs matching 1D grids");
  const auto w = trapezoid_weights(f.axis());
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (std::abs(f.x(i)) <= radius) acc += w[i] * std::norm(f[i] - g[i]);
  return std::sqrt(acc);
}

double max_distance_within(const GridFunction& f, const GridFunction& g, double radius) {
  if (!f.same_grid(g) || f.dims() != 1) throw ShapeError("max_distance_within needs matching 1D grids");
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (std::abs(f.x(i)) <= radius) m = std::max(m, std::abs(f[i] - g[i]));
  return m;
}

GridFunction fourier_transform(const GridFunction& f, std::vector<std::string>* warnings) {
  if (f.dims() != 1) throw ShapeError("fourier_transform is 1D");
  const Axis& axis = f.axis();
  if (std::abs(axis.x_min + axis.x_max) > 1e-12 * (axis.x_max - axis.x_min))
    throw ConfigError("fourier_transform needs a grid symmetric about 0");
  if (warnings != nullptr && boundary_max(f) > 1e-10 * max_abs(f)) {
    std::ostringstream msg;
    msg << "aliasing: boundary amplitude " << boundary_max(f) << " relative to peak " << max_abs(f);
    warnings->push_back(msg.str());
  }
  const auto w = trapezoid_weights(axis);
  std::vector<double> x(axis.n_points);
  std::vector<cplx> weighted(axis.n_points);
  for (std::size_t i = 0; i < axis.n_points; ++i) {
    x[i] = axis.at(i);
    weighted[i] = w[i] * f[i];
  }
  std::vector<cplx> out(axis.n_points);
  kernels::omp::exp_sum(x, x, weighted, -1.0, out);
  const double norm_factor = 1.0 / std::sqrt(2.0 * kPi);
  for (auto& v : out) v *= norm_factor;
  return GridFunction(axis, std::move(out));
}

namespace {

double moment(const GridFunction& f, int power) {
  const auto w = trapezoid_weights(f.axis());
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double p = std::norm(f[i]) * w[i];
    num += p * std::pow(f.x(i), power);
    den += p;
  }
  return num / den;
}

}  // namespace

double mean_position(const GridFunction& f) { return moment(f, 1); }
double mean_momentum(const GridFunction& f) { return moment(fourier_transform(f), 1); }

double variance_position(const GridFunction& f) {
  const double m = moment(f, 1);
  return moment(f, 2) - m * m;
}

double variance_momentum(const GridFunction& f) {
  const GridFunction g = fourier_transform(f);
  const double m = moment(g, 1);
  return moment(g, 2) - m * m;
}

}  // namespace squeeze
