#include "squeeze/singlemode.hpp"

#include <cmath>
#include <sstream>

#include "squeeze/errors.hpp"
#include "squeeze/states.hpp"

namespace squeeze {

void SqueezeSpec::validate() const {
  if (!(r >= 0.0) || !std::isfinite(r)) throw ConfigError("squeeze magnitude r must be >= 0");
  if (!(theta > -kPi && theta <= kPi)) throw ConfigError("squeeze phase must lie in (-pi, pi]");
}

SqueezeSpec SqueezeSpec::from_complex(cplx z) {
  SqueezeSpec s{std::abs(z), std::arg(z)};
  if (s.theta <= -kPi) s.theta = kPi;
  return s;
}

ResonantPair resonant_pair(std::size_t n, double r) {
  if (!(r >= 0.0)) throw ConfigError("resonant_pair needs r >= 0");
  const double nu = static_cast<double>(n) + 0.5;
  ResonantPair p;
  p.n = n;
  p.r = r;
  p.E_n = cplx{0.0, r * nu};
  p.s_plus = std::exp(r * nu);
  p.s_minus = std::exp(-r * nu);
  p.f_plus = TaylorState::monomial(n);
  p.f_minus = DualState::basis(n);
  return p;
}

double biorthogonality(std::size_t n, std::size_t m) {
  return DualState::basis(m).pair(TaylorState::monomial(n)).real();
}

GridFunction apply_exact(double r, const GridFunction& psi, kernels::Stencil stencil,
                         double boundary_tol) {
  if (psi.dims() != 1) throw ShapeError("apply_exact acts on 1D grids; use apply_exact_N");
  if (r == 0.0) return psi;
  const Axis& axis = psi.axis();
  const double factor = std::exp(-r);
  const bool reads_outside = factor * axis.x_max > axis.x_max || factor * axis.x_min < axis.x_min;
  if (reads_outside && boundary_max(psi) > boundary_tol * max_abs(psi)) {
    std::ostringstream msg;
    msg << "S(" << r << ") reads psi outside [" << axis.x_min << ", " << axis.x_max
        << "] where it has not decayed (boundary amplitude " << boundary_max(psi) << ")";
    throw RangeError(msg.str());
  }
  GridFunction out = GridFunction::zeros(psi.axes());
  const kernels::DilationLines lines{&axis, 1, 1, 1};
  kernels::omp::dilate(lines, factor, std::exp(-0.5 * r), stencil, psi.samples(), out.samples());
  return out;
}

namespace {

std::vector<cplx> derivative4(const GridFunction& psi) {
  const std::size_t n = psi.size();
  if (n < 5) throw ConfigError("finite-difference derivative needs at least 5 points");
  const double h12 = 12.0 * psi.axis().spacing();
  const auto f = psi.samples();
  std::vector<cplx> d(n);
  d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / h12;
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / h12;
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / h12;
  d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) / h12;
  d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) / h12;
  return d;
}

}  // namespace

GridFunction apply_H_grid(double r, const GridFunction& psi) {
  if (psi.dims() != 1) throw ShapeError("apply_H_grid acts on 1D grids");
  const auto d = derivative4(psi);
  GridFunction out = psi;
  const cplx ir{0.0, r};
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = ir * (psi.x(i) * d[i] + 0.5 * psi[i]);
  return out;
}

TaylorState apply_H_taylor(double r, const TaylorState& t) {
  std::vector<cplx> c(t.coeffs().begin(), t.coeffs().end());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] *= cplx{0.0, r * (static_cast<double>(n) + 0.5)};
  return TaylorState(std::move(c));
}

TaylorState apply_series_Z(double r, const TaylorState& t) {
  std::vector<cplx> c(t.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double s_minus = std::exp(-r * (static_cast<double>(n) + 0.5));
    // s-_n f+_n <f-_n, t>; the f+_n coefficient and the pairing's sqrt(n!)
    // are combined first so that the identity part is exactly 1.
    const double basis = inv_sqrt_factorial(n) / inv_sqrt_factorial(n);
    c[n] = s_minus * basis * t.coeff(n);
  }
  return TaylorState(std::move(c));
}

TaylorState resolve_identity_Z(const TaylorState& t) {
  std::vector<cplx> c(t.size());
  for (std::size_t n = 0; n < c.size(); ++n)
    c[n] = (inv_sqrt_factorial(n) / inv_sqrt_factorial(n)) * t.coeff(n);
  return TaylorState(std::move(c));
}

SeriesPairing pair_series_D(double r, const GridFunction& phi, const TaylorState& chi,
                            const PairingOptions& opts) {
  if (phi.dims() != 1) throw ShapeError("pair_series_D needs a 1D test function");
  const auto w = trapezoid_weights(phi.axis());
  const std::size_t n_terms = chi.size() + opts.consecutive;

  // Running powers x^n / sqrt(n!) would lose the f+_n normalization at large n;
  // moments are accumulated raw and normalized per term.
  std::vector<double> xs;
  std::vector<cplx> weighted;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] == cplx{}) continue;
    xs.push_back(phi.x(i));
    weighted.push_back(w[i] * phi[i]);
  }
  std::vector<cplx> powers = weighted;

  SeriesPairing out;
  std::size_t quiet = 0;
  std::size_t nonzero_terms = 0;
  cplx last_nonzero{};
  for (std::size_t n = 0; n < n_terms; ++n) {
    cplx moment{};
    for (const auto& p : powers) moment += p;
    for (std::size_t i = 0; i < powers.size(); ++i) powers[i] *= xs[i];

    const double s_plus = std::exp(r * (static_cast<double>(n) + 0.5));
    const cplx f_plus_phi = moment * inv_sqrt_factorial(n);
    const cplx f_minus_chi = chi.resonant_coefficient(n);
    const cplx term = s_plus * f_minus_chi * f_plus_phi;
    out.value += term;
    out.terms = n + 1;
    if (term != cplx{}) {
      ++nonzero_terms;
      last_nonzero = term;
    }
    if (std::abs(term) <= opts.rel_increment * std::abs(out.value)) {
      if (++quiet >= opts.consecutive) {
        out.converged = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  const bool tail_large = nonzero_terms > opts.consecutive &&
                          std::abs(last_nonzero) > 1e-6 * std::abs(out.value);
  if (!out.converged || tail_large) {
    std::ostringstream msg;
    msg << "D-series pairing did not converge after " << out.terms
        << " terms: last nonzero increment " << std::abs(last_nonzero) << ", partial sum "
        << std::abs(out.value);
    throw DivergenceError(msg.str());
  }
  return out;
}

cplx pair_dual_route(double r, const GridFunction& phi, const TaylorState& chi) {
  if (phi.dims() != 1) throw ShapeError("pair_dual_route needs a 1D test function");
  const TaylorState widened = apply_series_Z(-r, chi);
  const auto w = trapezoid_weights(phi.axis());
  cplx acc{};
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] == cplx{}) continue;
    acc += w[i] * phi[i] * widened.evaluate(phi.x(i));
  }
  return acc;
}

GridFunction squeezed_vacuum(double r, const Axis& axis) {
  const double amp = std::exp(-0.5 * r) * vacuum_peak();
  const double k = std::exp(-2.0 * r);
  return GridFunction::sample(axis, [=](double x) -> cplx { return amp * std::exp(-0.5 * k * x * x); });
}

}  // namespace squeeze
