#pragma once

#include <cstddef>
#include <vector>

#include "squeeze/grid.hpp"
#include "squeeze/kernels.hpp"
#include "squeeze/taylor.hpp"

namespace squeeze {

/// Single-mode squeeze parameter z = r e^{i theta}.
struct SqueezeSpec {
  double r = 0.0;
  double theta = 0.0;

  cplx z() const { return std::polar(r, theta); }
  /// Throws ConfigError unless r >= 0 and theta in (-pi, pi].
  void validate() const;
  static SqueezeSpec from_complex(cplx z);
};

/// One member of the two resonant families at index n.
struct ResonantPair {
  std::size_t n = 0;
  double r = 0.0;
  cplx E_n;               // i r (n + 1/2)
  double s_plus = 1.0;    // exp(+r (n + 1/2))
  double s_minus = 1.0;   // exp(-r (n + 1/2))
  TaylorState f_plus;     // x^n / sqrt(n!)
  DualState f_minus;      // unit coefficient at n
};

ResonantPair resonant_pair(std::size_t n, double r);

/// <f-_m, f+_n>, evaluated from the coefficient of f+_n, never by quadrature.
double biorthogonality(std::size_t n, std::size_t m);

/// S(r) psi(x) = e^{-r/2} psi(e^{-r} x). Off-grid values come from a local
/// Lagrange stencil; reading outside the input grid is allowed only where the
/// input has already decayed below boundary_tol * max|psi|.
GridFunction apply_exact(double r, const GridFunction& psi,
                         kernels::Stencil stencil = kernels::Stencil::octic,
                         double boundary_tol = 1e-10);

/// H(r) psi = i r (x psi' + psi/2) with a 4th-order finite-difference derivative.
GridFunction apply_H_grid(double r, const GridFunction& psi);

/// c_n -> i r (n + 1/2) c_n.
TaylorState apply_H_taylor(double r, const TaylorState& t);

/// S(r) on Z: sum_n s-_n |f+_n><f-_n|, i.e. c_n -> e^{-r(n+1/2)} c_n.
TaylorState apply_series_Z(double r, const TaylorState& t);

/// sum_n |f+_n><f-_n| applied to t (identity on Z).
TaylorState resolve_identity_Z(const TaylorState& t);

struct SeriesPairing {
  cplx value;             // sum_n s+_n <f-_n, chi> <f+_n, phi>
  std::size_t terms = 0;  // terms summed before the stopping rule fired
  bool converged = false;
};

struct PairingOptions {
  double rel_increment = 1e-12;
  std::size_t consecutive = 5;
};

/// <S(r) phi, chi> through the D-side series sum_n s+_n |f-_n><f+_n|,
/// with <f+_n, phi> by quadrature of the compactly supported phi.
/// Throws DivergenceError if the increments never settle.
SeriesPairing pair_series_D(double r, const GridFunction& phi, const TaylorState& chi,
                            const PairingOptions& opts = {});

/// int phi(x) (S(-r) chi)(x) dx, the duality partner of pair_series_D.
cplx pair_dual_route(double r, const GridFunction& phi, const TaylorState& chi);

/// e^{-r/2} pi^{-1/4} exp(-e^{-2r} x^2 / 2).
GridFunction squeezed_vacuum(double r, const Axis& axis = default_axis());

}  // namespace squeeze
