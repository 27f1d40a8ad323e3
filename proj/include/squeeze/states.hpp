#pragma once

#include <string>
#include <variant>
#include <vector>

#include "squeeze/grid.hpp"
#include "squeeze/taylor.hpp"

namespace squeeze {

struct Vacuum {};
struct Coherent {
  cplx alpha;
};
/// Analytic states with closed-form wavefunctions and Taylor series.
using StateKind = std::variant<Vacuum, Coherent>;

/// pi^{-1/4} exp(-x^2/2).
cplx vacuum_value(double x);
/// <x|alpha> = pi^{-1/4} exp(-x^2/2 + sqrt2 alpha x - alpha^2/2 - |alpha|^2/2);
/// real and positive for real alpha.
cplx coherent_value(cplx alpha, double x);

GridFunction make_vacuum(const Axis& axis = default_axis());
GridFunction make_coherent(cplx alpha, const Axis& axis = default_axis());
GridFunction make_state(const StateKind& kind, const Axis& axis = default_axis());

/// Smooth bump exp(-1/(1-(x/a)^2)) on |x| < a, zero outside.
GridFunction make_bump(double a, const Axis& axis = default_axis());

/// Taylor coefficients of a vacuum or coherent state. Coherent
/// coefficients follow the normalized Hermite recurrence
/// h_{n+1} = (sqrt2 alpha h_n - h_{n-1}) / (n+1).
TaylorState taylor_of_state(const StateKind& kind, std::size_t n_max);

/// Result of checking a TaylorState against an evaluation radius.
struct TaylorCheck {
  double radius;
  double tail_bound;
  bool converged;
  std::string warning;
};
TaylorCheck check_taylor(const TaylorState& t, double radius, double tol = 1e-12);

/// <f, g> with conjugation on f, tensor trapezoid rule. Grids must match.
cplx inner_product(const GridFunction& f, const GridFunction& g);
double norm(const GridFunction& f);
/// L2 norm of f - g.
double l2_distance(const GridFunction& f, const GridFunction& g);
/// L2 distance restricted to |x| <= radius (1D).
double l2_distance_within(const GridFunction& f, const GridFunction& g, double radius);
/// Max |f - g| over |x| <= radius (1D).
double max_distance_within(const GridFunction& f, const GridFunction& g, double radius);

/// Unitary Fourier transform F[psi](p) = (2 pi)^{-1/2} int e^{-ipx} psi(x) dx,
/// by direct trapezoid quadrature, sampled on the same (symmetric) grid.
/// Appends an aliasing warning when the boundary mass is significant.
GridFunction fourier_transform(const GridFunction& f, std::vector<std::string>* warnings = nullptr);

/// Expectation values of x and p (p through the Fourier transform).
double mean_position(const GridFunction& f);
double mean_momentum(const GridFunction& f);
double variance_position(const GridFunction& f);
double variance_momentum(const GridFunction& f);

}  // namespace squeeze
