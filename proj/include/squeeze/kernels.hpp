#pragma once

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// reference and an OpenMP version. The library calls the OpenMP ones; the
// serial ones are kept for the kernel tests and the benchmark.

#include <cstddef>
#include <span>

#include "squeeze/grid.hpp"
#include "squeeze/special.hpp"

namespace squeeze::kernels {

/// Local Lagrange stencil used for off-grid evaluation.
enum class Stencil : int { cubic = 4, octic = 8 };

/// Lagrange interpolation of one strided line at position x.
/// Returns false (and leaves *out untouched) when x is outside the axis.
bool interpolate(const Axis& axis, const cplx* line, std::size_t stride, double x,
                 Stencil stencil, cplx* out);

struct DilationLines {
  const Axis* axis;         // axis being dilated
  std::size_t line_stride;  // distance between samples along the axis
  std::size_t outer;        // number of outer blocks
  std::size_t inner;        // == line_stride
};

namespace serial {

/// out[j] = sum_k f[k] * exp(i * sign * t[j] * u[k]).
void exp_sum(std::span<const double> t, std::span<const double> u, std::span<const cplx> f,
             double sign, std::span<cplx> out);

/// out(x) = scale * in(factor * x) along every line of one axis; samples
/// falling outside the axis are set to zero.
void dilate(const DilationLines& lines, double factor, double scale, Stencil stencil,
            std::span<const cplx> in, std::span<cplx> out);

/// Normalized Hermite functions h_n(x_i), n < dim, laid out [n * nx + i].
void hermite_table(std::span<const double> x, std::size_t dim, std::span<double> table);

/// amp[n] = sum_i w[i] h_n(x_i) psi[i].
void hermite_project(std::span<const double> table, std::span<const double> w,
                     std::span<const cplx> psi, std::size_t dim, std::span<cplx> amp);

}  // namespace serial

namespace omp {

void exp_sum(std::span<const double> t, std::span<const double> u, std::span<const cplx> f,
             double sign, std::span<cplx> out);
void dilate(const DilationLines& lines, double factor, double scale, Stencil stencil,
            std::span<const cplx> in, std::span<cplx> out);
void hermite_table(std::span<const double> x, std::size_t dim, std::span<double> table);
void hermite_project(std::span<const double> table, std::span<const double> w,
                     std::span<const cplx> psi, std::size_t dim, std::span<cplx> amp);

}  // namespace omp

}  // namespace squeeze::kernels
