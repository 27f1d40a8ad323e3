#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "squeeze/grid.hpp"
#include "squeeze/taylor.hpp"

namespace squeeze {

/// Half-line branch of the generalized eigenfunctions.
enum class Branch { plus, minus };

/// psi^E_pm(x) = (2 pi r)^{-1/2} |x|^{-1/2} e^{-i (E/r) ln|x|} on the branch's
/// half-line, zero on the other. Throws SingularPointError at x = 0.
cplx psi_E(double E, Branch branch, double r, double x);

/// Log-substitution x = +-e^u and the conjugate energy grid.
struct SpectralGrid {
  double u_min = -40.0;
  double u_max = 4.0;
  std::size_t n_u = 8192;
  /// E-grid covers |E| <= k_max * r.
  double k_max = 40.0;
  /// |e^{u/2} psi| at u_min, relative to its maximum.
  double coverage_tol = 1e-8;
};

/// Continuous-spectrum coordinates c_pm(E) = <psi^E_pm, psi>.
struct MellinAmplitude {
  double r = 0.0;
  std::vector<double> E;
  std::vector<cplx> c_plus;
  std::vector<cplx> c_minus;
  /// Grid the amplitudes reconstruct onto.
  Axis target;

  double dE() const { return E.size() > 1 ? E[1] - E[0] : 0.0; }
};

MellinAmplitude mellin_forward(const GridFunction& psi, double r, const SpectralGrid& grid = {});

/// sum_pm int |c_pm(E)|^2 dE.
double plancherel_norm(const MellinAmplitude& amp);

/// sum_pm int g(E) psi^E_pm(x) c_pm(E) dE on amp.target.
/// Throws TruncationError when |g c| at the E-grid edge exceeds edge_tol * max|g c|.
GridFunction spectral_apply(const MellinAmplitude& amp, const std::function<cplx(double)>& g,
                            double edge_tol = 1e-8);

/// A test function known both through its Taylor coefficients at 0 and
/// through pointwise values (closed form or grid interpolation).
struct HybridFunction {
  TaylorState taylor;
  std::function<cplx(double)> eval;

  static HybridFunction from_grid(const GridFunction& grid, TaylorState taylor);
  HybridFunction reflected() const;
};

struct ContinuationResult {
  cplx lambda;
  cplx value;
  std::size_t n_subtracted = 0;
  std::vector<std::size_t> pole_flags;
};

/// Continuation of M_pm(lambda; phi) = int_0^inf x^lambda phi(+-x) dx to
/// Re lambda > -n_subtracted - 1 by subtracting Taylor terms on [0,1].
/// n_subtracted defaults to the smallest admissible count plus one.
/// At a pole (|lambda + n + 1| < 1e-9) the finite part is returned.
ContinuationResult continue_pairing(cplx lambda, Branch branch, const HybridFunction& phi,
                                    std::optional<std::size_t> n_subtracted = std::nullopt);

/// lambda(E) = -iE/r - 1/2, the exponent of psi^E.
cplx lambda_of_energy(cplx E, double r);
cplx energy_of_lambda(cplx lambda, double r);

/// Residue of M_pm(lambda; phi) at lambda = -n-1 (equals the n-th Taylor
/// coefficient of phi(+-x)); no condition on its size.
cplx pairing_residue(std::size_t n, const HybridFunction& phi, Branch branch = Branch::plus);

struct ResidueResult {
  std::size_t n = 0;
  double r = 0.0;
  Branch branch = Branch::plus;
  cplx pole_E;            // -E_n
  cplx residue_lambda;    // residue of M(lambda) at lambda = -n-1
  cplx residue_E;         // residue of <psi^E, phi> at E = -E_n
  cplx pairing;           // <f-_n, phi> on the branch
  cplx ratio;             // residue_E / pairing
};

/// Residue of E -> int psi^E(x) phi(x) dx at E = -E_n, extracted by averaging
/// (lambda - lambda0) M(lambda) over four points on circles of radius 1e-2
/// and 1e-3 and Richardson-extrapolating. Throws IllConditionedError when
/// |<f-_n, phi>| < 1e-12.
ResidueResult residue_at_resonance(std::size_t n, double r, const HybridFunction& phi,
                                   Branch branch = Branch::plus);

struct InvertedOscillatorReport {
  double r = 0.0;
  double determinant = 0.0;
  double poisson_bracket = 0.0;
  /// Max entry of T^T A T - diag(-r^2/2, 1/2).
  double congruence_residual = 0.0;
  /// Oscillator frequency omega with omega^2 = -r^2 (upper branch, i r).
  cplx omega;
  std::vector<cplx> eigenvalues;  // omega (n + 1/2), n = 0..n_max
  double eigenvalue_residual = 0.0;  // vs ResonantPair::E_n
};

InvertedOscillatorReport inverted_oscillator_check(double r, std::size_t n_max = 5);

}  // namespace squeeze
