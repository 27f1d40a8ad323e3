#include "squeeze/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "squeeze/errors.hpp"
#include "squeeze/kernels.hpp"
#include "squeeze/singlemode.hpp"

namespace squeeze {

cplx psi_E(double E, Branch branch, double r, double x) {
  if (!(r > 0.0)) throw ConfigError("psi_E needs r > 0");
  if (x == 0.0) throw SingularPointError("psi^E is singular at x = 0");
  if ((branch == Branch::plus) != (x > 0.0)) return 0.0;
  const double ax = std::abs(x);
  return std::polar(1.0 / std::sqrt(2.0 * kPi * r * ax), -(E / r) * std::log(ax));
}

namespace {

struct LogSamples {
  std::vector<double> u;
  std::vector<double> w;
};

LogSamples log_samples(const SpectralGrid& g) {
  if (g.n_u < 2 || !(g.u_max > g.u_min)) throw ConfigError("invalid log-grid");
  LogSamples s;
  const double du = (g.u_max - g.u_min) / static_cast<double>(g.n_u - 1);
  s.u.resize(g.n_u);
  s.w.assign(g.n_u, du);
  for (std::size_t j = 0; j < g.n_u; ++j) s.u[j] = g.u_min + static_cast<double>(j) * du;
  s.w.front() *= 0.5;
  s.w.back() *= 0.5;
  return s;
}

std::vector<cplx> branch_integrand(const GridFunction& psi, const LogSamples& s, double sign) {
  const Axis& axis = psi.axis();
  std::vector<cplx> g(s.u.size());
  for (std::size_t j = 0; j < s.u.size(); ++j) {
    const double x = sign * std::exp(s.u[j]);
    cplx v{};
    if (kernels::interpolate(axis, psi.samples().data(), 1, x, kernels::Stencil::octic, &v))
      g[j] = std::exp(0.5 * s.u[j]) * v;
  }
  return g;
}

double max_of(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

MellinAmplitude mellin_forward(const GridFunction& psi, double r, const SpectralGrid& grid) {
  if (psi.dims() != 1) throw ShapeError("mellin_forward is 1D");
  if (!(r > 0.0)) throw ConfigError("mellin_forward needs r > 0");
  const double peak = max_of(std::vector<cplx>(psi.samples().begin(), psi.samples().end()));
  if (boundary_max(psi) > 1e-8 * peak) {
    std::ostringstream msg;
    msg << "state has not decayed at the grid edge (" << boundary_max(psi) << ")";
    throw CoverageError(msg.str());
  }

  const LogSamples s = log_samples(grid);
  const auto g_plus = branch_integrand(psi, s, +1.0);
  const auto g_minus = branch_integrand(psi, s, -1.0);
  for (const auto* g : {&g_plus, &g_minus}) {
    const double m = max_of(*g);
    if (m == 0.0) continue;
    if (std::abs(g->front()) > grid.coverage_tol * m || std::abs(g->back()) > grid.coverage_tol * m) {
      std::ostringstream msg;
      msg << "log-grid [" << grid.u_min << ", " << grid.u_max
          << "] does not cover the state: e^{u/2} psi(e^u) is " << std::abs(g->front()) << " at u_min and "
          << std::abs(g->back()) << " at u_max";
      throw CoverageError(msg.str());
    }
  }

  const double du = s.u[1] - s.u[0];
  const double dk = 2.0 * kPi / (static_cast<double>(grid.n_u) * du);
  const auto half = static_cast<long>(std::floor(grid.k_max / dk));
  std::vector<double> k(static_cast<std::size_t>(2 * half + 1));
  for (long j = -half; j <= half; ++j) k[static_cast<std::size_t>(j + half)] = static_cast<double>(j) * dk;

  MellinAmplitude amp;
  amp.r = r;
  amp.target = psi.axis();
  amp.E.resize(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) amp.E[j] = r * k[j];

  const double norm_factor = 1.0 / std::sqrt(2.0 * kPi * r);
  auto transform = [&](const std::vector<cplx>& g) {
    std::vector<cplx> f(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) f[j] = s.w[j] * g[j];
    std::vector<cplx> c(k.size());
    kernels::omp::exp_sum(k, s.u, f, +1.0, c);
    for (auto& v : c) v *= norm_factor;
    return c;
  };
  amp.c_plus = transform(g_plus);
  amp.c_minus = transform(g_minus);
  return amp;
}

double plancherel_norm(const MellinAmplitude& amp) {
  double acc = 0.0;
  for (std::size_t j = 0; j < amp.E.size(); ++j) acc += std::norm(amp.c_plus[j]) + std::norm(amp.c_minus[j]);
  return acc * amp.dE();
}

GridFunction spectral_apply(const MellinAmplitude& amp, const std::function<cplx(double)>& g,
                            double edge_tol) {
  if (amp.E.size() < 2) throw ConfigError("spectral_apply needs a populated E-grid");
  const std::size_t ne = amp.E.size();
  std::vector<cplx> a_plus(ne);
  std::vector<cplx> a_minus(ne);
  for (std::size_t j = 0; j < ne; ++j) {
    const cplx m = g(amp.E[j]);
    a_plus[j] = m * amp.c_plus[j];
    a_minus[j] = m * amp.c_minus[j];
  }
  for (const auto* a : {&a_plus, &a_minus}) {
    const double m = max_of(*a);
    const double edge = std::max(std::abs(a->front()), std::abs(a->back()));
    if (m > 0.0 && edge > edge_tol * m) {
      std::ostringstream msg;
      msg << "g(E) c(E) has not decayed at |E| = " << amp.E.back() << ": " << edge << " vs peak " << m;
      throw TruncationError(msg.str());
    }
  }

  const double r = amp.r;
  const double dk = amp.dE() / r;
  std::vector<double> k(ne);
  for (std::size_t j = 0; j < ne; ++j) k[j] = amp.E[j] / r;
  const double prefactor = r * dk / std::sqrt(2.0 * kPi * r);

  const Axis& axis = amp.target;
  const double eps = 1e-3 * axis.spacing();
  // Points by branch; x = 0 is replaced by the mean of the two one-sided limits.
  std::vector<double> u_plus, u_minus;
  std::vector<std::size_t> i_plus, i_minus;
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < axis.n_points; ++i) {
    const double x = axis.at(i);
    if (x > 0.0) {
      u_plus.push_back(std::log(x));
      i_plus.push_back(i);
    } else if (x < 0.0) {
      u_minus.push_back(std::log(-x));
      i_minus.push_back(i);
    } else {
      zeros.push_back(i);
    }
  }
  if (!zeros.empty()) {
    u_plus.push_back(std::log(eps));
    u_minus.push_back(std::log(eps));
  }
  std::vector<cplx> v_plus(u_plus.size());
  std::vector<cplx> v_minus(u_minus.size());
  kernels::omp::exp_sum(u_plus, k, a_plus, -1.0, v_plus);
  kernels::omp::exp_sum(u_minus, k, a_minus, -1.0, v_minus);

  std::vector<cplx> out(axis.n_points);
  for (std::size_t j = 0; j < i_plus.size(); ++j)
    out[i_plus[j]] = prefactor * std::exp(-0.5 * u_plus[j]) * v_plus[j];
  for (std::size_t j = 0; j < i_minus.size(); ++j)
    out[i_minus[j]] = prefactor * std::exp(-0.5 * u_minus[j]) * v_minus[j];
  if (!zeros.empty()) {
    const double scale = prefactor / std::sqrt(eps);
    out[zeros.front()] = 0.5 * scale * (v_plus.back() + v_minus.back());
  }
  return GridFunction(axis, std::move(out));
}

HybridFunction HybridFunction::from_grid(const GridFunction& grid, TaylorState taylor) {
  if (grid.dims() != 1) throw ShapeError("hybrid functions are 1D");
  HybridFunction h;
  h.taylor = std::move(taylor);
  h.eval = [grid](double x) -> cplx {
    cplx v{};
    if (kernels::interpolate(grid.axis(), grid.samples().data(), 1, x, kernels::Stencil::octic, &v))
      return v;
    return 0.0;
  };
  return h;
}

HybridFunction HybridFunction::reflected() const {
  HybridFunction h;
  h.taylor = taylor.reflected();
  h.eval = [f = eval](double x) { return f(-x); };
  return h;
}

namespace {

template <class Quad, class F>
cplx integrate_complex(Quad& quad, F f, double a, double b) {
  const double tol = 1e-14;
  const double re = quad.integrate([&](double x) { return f(x).real(); }, a, b, tol);
  const double im = quad.integrate([&](double x) { return f(x).imag(); }, a, b, tol);
  return {re, im};
}

// x^p for x > 0 and complex p, without overflow in the intermediate.
cplx cpow_pos(double x, cplx p) { return std::exp(p * std::log(x)); }

}  // namespace

ContinuationResult continue_pairing(cplx lambda, Branch branch, const HybridFunction& phi,
                                    std::optional<std::size_t> n_subtracted) {
  const HybridFunction f = branch == Branch::plus ? phi : phi.reflected();
  const TaylorState& t = f.taylor;
  if (t.size() == 0 || !f.eval) throw PreconditionError("continuation needs Taylor data and pointwise values");

  const double re = lambda.real();
  const std::size_t n_min =
      re + 1.0 > 0.0 ? 0 : static_cast<std::size_t>(std::floor(-re - 1.0)) + 1;
  const std::size_t n_sub = n_subtracted.value_or(n_min + 1);
  if (n_sub < n_min) {
    std::ostringstream msg;
    msg << "Re lambda = " << re << " needs at least " << n_min << " subtracted Taylor terms, got " << n_sub;
    throw PreconditionError(msg.str());
  }
  if (n_sub > t.size()) throw PreconditionError("not enough Taylor coefficients for the requested subtraction");

  ContinuationResult out;
  out.lambda = lambda;
  out.n_subtracted = n_sub;
  for (std::size_t n = 0; n < t.size(); ++n)
    if (std::abs(lambda + static_cast<double>(n + 1)) < 1e-9) out.pole_flags.push_back(n);

  // Subtracted terms, integrated exactly.
  cplx analytic{};
  for (std::size_t k = 0; k < n_sub; ++k) {
    const cplx den = lambda + static_cast<double>(k + 1);
    if (std::abs(den) < 1e-9) continue;  // finite part at a pole
    analytic += t.coeff(k) / den;
  }

  // Remainder on [0, 1]: Taylor tail near 0, values minus the polynomial beyond.
  const double radius = t.convergence_radius(1e-14);
  const double x_split = std::min(0.5, 0.5 * radius);
  const cplx lam_n = lambda + static_cast<double>(n_sub);
  auto tail_integrand = [&](double x) -> cplx {
    if (x <= 0.0) return 0.0;
    cplx acc{};
    for (std::size_t k = t.size(); k-- > n_sub;) acc = acc * x + t.coeff(k);
    return cpow_pos(x, lam_n) * acc;
  };
  auto head_integrand = [&](double x) -> cplx {
    cplx poly{};
    for (std::size_t k = n_sub; k-- > 0;) poly = poly * x + t.coeff(k);
    return cpow_pos(x, lambda) * (f.eval(x) - poly);
  };
  auto far_integrand = [&](double x) -> cplx {
    const cplx v = f.eval(x);
    if (v == cplx{}) return 0.0;
    return cpow_pos(x, lambda) * v;
  };

  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  const cplx near = integrate_complex(ts, tail_integrand, 0.0, x_split) +
                    integrate_complex(ts, head_integrand, x_split, 1.0);
  const cplx far = integrate_complex(es, far_integrand, 1.0, std::numeric_limits<double>::infinity());
  out.value = near + analytic + far;
  return out;
}

cplx lambda_of_energy(cplx E, double r) { return cplx{0.0, -1.0} * E / r - 0.5; }
cplx energy_of_lambda(cplx lambda, double r) { return cplx{0.0, r} * (lambda + 0.5); }

cplx pairing_residue(std::size_t n, const HybridFunction& phi, Branch branch) {
  const cplx lambda0 = -static_cast<double>(n + 1);
  const std::size_t n_sub = n + 2;
  auto circle_average = [&](double eps) {
    cplx acc{};
    const cplx steps[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto& s : steps) {
      const cplx delta = eps * s;
      acc += delta * continue_pairing(lambda0 + delta, branch, phi, n_sub).value;
    }
    return 0.25 * acc;
  };
  // The four-point average cancels the odd Laurent terms; eps^4 is the leading error.
  const double e1 = 1e-2;
  const double e2 = 1e-3;
  const double q = std::pow(e1 / e2, 4);
  return (q * circle_average(e2) - circle_average(e1)) / (q - 1.0);
}

ResidueResult residue_at_resonance(std::size_t n, double r, const HybridFunction& phi, Branch branch) {
  if (!(r > 0.0)) throw ConfigError("residue_at_resonance needs r > 0");
  ResidueResult res;
  res.n = n;
  res.r = r;
  res.branch = branch;
  const TaylorState on_branch = branch == Branch::plus ? phi.taylor : phi.taylor.reflected();
  res.pairing = on_branch.resonant_coefficient(n);
  if (std::abs(res.pairing) < 1e-12) {
    std::ostringstream msg;
    msg << "<f-_" << n << ", phi> = " << std::abs(res.pairing) << " vanishes; residue ratio is ill-conditioned";
    throw IllConditionedError(msg.str());
  }

  const cplx lambda0 = -static_cast<double>(n + 1);
  res.residue_lambda = pairing_residue(n, phi, branch);
  res.pole_E = energy_of_lambda(lambda0, r);
  res.residue_E = cplx{0.0, r} * res.residue_lambda / std::sqrt(2.0 * kPi * r);
  res.ratio = res.residue_E / res.pairing;
  return res;
}

InvertedOscillatorReport inverted_oscillator_check(double r, std::size_t n_max) {
  if (!(r > 0.0)) throw ConfigError("inverted_oscillator_check needs r > 0");
  InvertedOscillatorReport rep;
  rep.r = r;
  const double s = 1.0 / std::sqrt(2.0 * r);
  // Rows x, p; columns Q, P.
  Eigen::Matrix2d T;
  T << r * s, -s, r * s, s;
  rep.determinant = T.determinant();
  rep.poisson_bracket = T(0, 0) * T(1, 1) - T(0, 1) * T(1, 0);
  // -r x p as a symmetric quadratic form in (x, p).
  Eigen::Matrix2d A;
  A << 0.0, -0.5 * r, -0.5 * r, 0.0;
  Eigen::Matrix2d target;
  target << -0.5 * r * r, 0.0, 0.0, 0.5;
  rep.congruence_residual = (T.transpose() * A * T - target).cwiseAbs().maxCoeff();
  // 1/2 (P^2 + omega^2 Q^2) with omega^2 = 2 target(0,0) / (2 target(1,1)).
  rep.omega = std::sqrt(cplx{target(0, 0) / target(1, 1), 0.0});
  for (std::size_t n = 0; n <= n_max; ++n) {
    const cplx e = rep.omega * (static_cast<double>(n) + 0.5);
    rep.eigenvalues.push_back(e);
    rep.eigenvalue_residual = std::max(rep.eigenvalue_residual, std::abs(e - resonant_pair(n, r).E_n));
  }
  return rep;
}

}  // namespace squeeze
