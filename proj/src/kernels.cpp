#include "squeeze/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace squeeze::kernels {

bool interpolate(const Axis& axis, const cplx* line, std::size_t stride, double x,
                 Stencil stencil, cplx* out) {
  const double h = axis.spacing();
  const double t = (x - axis.x_min) / h;
  const double last = static_cast<double>(axis.n_points - 1);
  if (t < 0.0 || t > last) {
    // Allow rounding slop at the ends.
    if (t < -1e-9 || t > last + 1e-9) return false;
  }
  const long m = std::min<long>(static_cast<int>(stencil), static_cast<long>(axis.n_points));
  long i0 = static_cast<long>(std::floor(t)) - m / 2 + 1;
  i0 = std::clamp<long>(i0, 0, static_cast<long>(axis.n_points) - m);
  const double s = t - static_cast<double>(i0);
  cplx acc{};
  for (long j = 0; j < m; ++j) {
    double w = 1.0;
    for (long k = 0; k < m; ++k) {
      if (k == j) continue;
      w *= (s - static_cast<double>(k)) / static_cast<double>(j - k);
    }
    acc += w * line[static_cast<std::size_t>(i0 + j) * stride];
  }
  *out = acc;
  return true;
}

namespace {

inline void dilate_line(const DilationLines& lines, std::size_t block, std::size_t inner,
                        double factor, double scale, Stencil stencil, const cplx* in, cplx* out) {
  const Axis& axis = *lines.axis;
  const std::size_t n = axis.n_points;
  const std::size_t base = block * n * lines.line_stride + inner;
  for (std::size_t i = 0; i < n; ++i) {
    cplx v{};
    if (interpolate(axis, in + base, lines.line_stride, factor * axis.at(i), stencil, &v))
      out[base + i * lines.line_stride] = scale * v;
    else
      out[base + i * lines.line_stride] = cplx{};
  }
}

inline void hermite_column(double x, std::size_t dim, std::size_t nx, std::size_t i,
                           double* table) {
  double prev = 0.0;
  double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  table[i] = cur;
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    const double dn = static_cast<double>(n);
    const double next = std::sqrt(2.0 / (dn + 1.0)) * x * cur - std::sqrt(dn / (dn + 1.0)) * prev;
    prev = cur;
    cur = next;
    table[(n + 1) * nx + i] = cur;
  }
}

}  // namespace

namespace serial {

void exp_sum(std::span<const double> t, std::span<const double> u, std::span<const cplx> f,
             double sign, std::span<cplx> out) {
  for (std::size_t j = 0; j < t.size(); ++j) {
    cplx acc{};
    for (std::size_t k = 0; k < u.size(); ++k) acc += f[k] * std::polar(1.0, sign * t[j] * u[k]);
    out[j] = acc;
  }
}

void dilate(const DilationLines& lines, double factor, double scale, Stencil stencil,
            std::span<const cplx> in, std::span<cplx> out) {
  for (std::size_t b = 0; b < lines.outer; ++b)
    for (std::size_t q = 0; q < lines.inner; ++q)
      dilate_line(lines, b, q, factor, scale, stencil, in.data(), out.data());
}

void hermite_table(std::span<const double> x, std::size_t dim, std::span<double> table) {
  for (std::size_t i = 0; i < x.size(); ++i) hermite_column(x[i], dim, x.size(), i, table.data());
}

void hermite_project(std::span<const double> table, std::span<const double> w,
                     std::span<const cplx> psi, std::size_t dim, std::span<cplx> amp) {
  const std::size_t nx = w.size();
  for (std::size_t n = 0; n < dim; ++n) {
    cplx acc{};
    for (std::size_t i = 0; i < nx; ++i) acc += w[i] * table[n * nx + i] * psi[i];
    amp[n] = acc;
  }
}

}  // namespace serial

namespace omp {

void exp_sum(std::span<const double> t, std::span<const double> u, std::span<const cplx> f,
             double sign, std::span<cplx> out) {
  const long nt = static_cast<long>(t.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < nt; ++j) {
    cplx acc{};
    const double tj = sign * t[static_cast<std::size_t>(j)];
    for (std::size_t k = 0; k < u.size(); ++k) acc += f[k] * std::polar(1.0, tj * u[k]);
    out[static_cast<std::size_t>(j)] = acc;
  }
}

void dilate(const DilationLines& lines, double factor, double scale, Stencil stencil,
            std::span<const cplx> in, std::span<cplx> out) {
  const long total = static_cast<long>(lines.outer * lines.inner);
#pragma omp parallel for schedule(static)
  for (long l = 0; l < total; ++l) {
    const auto b = static_cast<std::size_t>(l) / lines.inner;
    const auto q = static_cast<std::size_t>(l) % lines.inner;
    dilate_line(lines, b, q, factor, scale, stencil, in.data(), out.data());
  }
}

void hermite_table(std::span<const double> x, std::size_t dim, std::span<double> table) {
  const long nx = static_cast<long>(x.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < nx; ++i)
    hermite_column(x[static_cast<std::size_t>(i)], dim, x.size(), static_cast<std::size_t>(i),
                   table.data());
}

void hermite_project(std::span<const double> table, std::span<const double> w,
                     std::span<const cplx> psi, std::size_t dim, std::span<cplx> amp) {
  const std::size_t nx = w.size();
  const long nd = static_cast<long>(dim);
#pragma omp parallel for schedule(static)
  for (long n = 0; n < nd; ++n) {
    cplx acc{};
    const double* row = table.data() + static_cast<std::size_t>(n) * nx;
    for (std::size_t i = 0; i < nx; ++i) acc += w[i] * row[i] * psi[i];
    amp[static_cast<std::size_t>(n)] = acc;
  }
}

}  // namespace omp

}  // namespace squeeze::kernels
